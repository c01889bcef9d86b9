//! Small numeric kernels: streaming log-sum-exp and compensated summation.

use crate::Scalar;

/// Streaming log-sum-exp accumulator.
///
/// Accumulates `ln(sum_i exp(x_i))` without leaving the log domain, so p-th
/// power sums of values like `level_size(n)^(1/p)` never overflow.
#[derive(Debug, Clone)]
pub struct LogSumExp<S: Scalar> {
    max: S,
    sum: S,
}

impl<S: Scalar> LogSumExp<S> {
    pub fn new() -> Self {
        Self {
            max: S::neg_infinity(),
            sum: S::zero(),
        }
    }

    pub fn push(&mut self, x: S) {
        if x == S::neg_infinity() {
            return;
        }
        if x <= self.max {
            self.sum += (x - self.max).exp();
        } else {
            self.sum = self.sum * (self.max - x).exp() + S::one();
            self.max = x;
        }
    }

    /// `ln(sum exp)`; negative infinity when nothing finite was pushed.
    pub fn value(&self) -> S {
        if self.sum == S::zero() {
            S::neg_infinity()
        } else {
            self.max + self.sum.ln()
        }
    }
}

impl<S: Scalar> Default for LogSumExp<S> {
    fn default() -> Self {
        Self::new()
    }
}

/// Kahan compensated summation.
#[derive(Debug, Clone)]
pub struct Kahan<S: Scalar> {
    sum: S,
    c: S,
}

impl<S: Scalar> Kahan<S> {
    pub fn new() -> Self {
        Self {
            sum: S::zero(),
            c: S::zero(),
        }
    }

    pub fn push(&mut self, x: S) {
        let y = x - self.c;
        let t = self.sum + y;
        self.c = (t - self.sum) - y;
        self.sum = t;
    }

    pub fn value(&self) -> S {
        self.sum
    }
}

impl<S: Scalar> Default for Kahan<S> {
    fn default() -> Self {
        Self::new()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn logsumexp_matches_direct_sum() {
        let xs = [0.5f64, 2.0, -1.0, 3.5];
        let mut acc = LogSumExp::new();
        for &x in &xs {
            acc.push(x);
        }
        let direct: f64 = xs.iter().map(|x| x.exp()).sum::<f64>().ln();
        assert!((acc.value() - direct).abs() < 1e-14);
    }

    #[test]
    fn logsumexp_survives_large_inputs() {
        let mut acc = LogSumExp::new();
        acc.push(1000.0f64);
        acc.push(1000.0);
        assert!((acc.value() - (1000.0 + 2.0f64.ln())).abs() < 1e-12);
    }

    #[test]
    fn logsumexp_empty_is_neg_inf() {
        let acc: LogSumExp<f64> = LogSumExp::new();
        assert_eq!(acc.value(), f64::NEG_INFINITY);
        let mut acc = acc;
        acc.push(f64::NEG_INFINITY);
        assert_eq!(acc.value(), f64::NEG_INFINITY);
    }

    #[test]
    fn kahan_recovers_small_terms() {
        let mut acc = Kahan::new();
        acc.push(1.0f64);
        for _ in 0..10_000 {
            acc.push(1e-16);
        }
        assert!((acc.value() - (1.0 + 1e-12)).abs() < 1e-15);
    }
}
