//! Exact combinatorics and addressing for the `(q+1)`-homogeneous rooted tree.
//!
//! Vertices are addressed by `(level, index)` with contiguous child blocks:
//! the root's children are `(1, 0..=q)` and a vertex `(n, i)` with `n >= 1`
//! has children `(n+1, i*q + j)` for `j in 0..q`. Parent/child arithmetic is
//! O(1) and the tree is never materialized.

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};

use crate::{Error, Result, Scalar};

/// Branching data of a `(q+1)`-homogeneous rooted tree: the root has `q+1`
/// children, every other vertex has `q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TreeGeometry {
    q: u64,
}

/// `(level, index)` address of a vertex; `level` is the edge distance to the
/// root and `index` enumerates the level left to right.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId {
    pub level: u64,
    pub index: u64,
}

impl VertexId {
    pub const ROOT: VertexId = VertexId { level: 0, index: 0 };

    pub fn new(level: u64, index: u64) -> Self {
        Self { level, index }
    }

    pub fn is_root(&self) -> bool {
        self.level == 0
    }
}

impl std::fmt::Display for VertexId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {})", self.level, self.index)
    }
}

/// The vertex `(n, 0)`; the map `n -> (n, 0)` is an infinite path from the
/// root, each vertex the parent of the next.
pub fn leftmost_path_vertex(n: u64) -> VertexId {
    VertexId::new(n, 0)
}

impl TreeGeometry {
    pub fn new(q: u64) -> Result<Self> {
        if q < 1 {
            return Err(Error::InvalidGeometry);
        }
        Ok(Self { q })
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    /// Number of vertices at level `n`, exactly: `1` for the root level,
    /// `(q+1) * q^(n-1)` otherwise.
    pub fn level_size(&self, n: u64) -> BigUint {
        if n == 0 {
            BigUint::one()
        } else {
            BigUint::from(self.q + 1) * BigUint::from(self.q).pow((n - 1) as u32)
        }
    }

    /// `ln(level_size(n))`, computed in the log domain so deep levels never
    /// overflow.
    pub fn log_level_size<S: Scalar>(&self, n: u64) -> S {
        if n == 0 {
            return S::zero();
        }
        let q = S::from_u64(self.q).unwrap();
        let q1 = S::from_u64(self.q + 1).unwrap();
        q1.ln() + S::from_u64(n - 1).unwrap() * q.ln()
    }

    /// Level size as a scalar when it fits; callers needing exactness use
    /// [`TreeGeometry::level_size`].
    pub fn level_size_approx<S: Scalar>(&self, n: u64) -> S {
        self.log_level_size::<S>(n).exp()
    }

    pub fn contains(&self, v: VertexId) -> bool {
        BigUint::from(v.index) < self.level_size(v.level)
    }

    pub fn validate(&self, v: VertexId) -> Result<()> {
        if self.contains(v) {
            Ok(())
        } else {
            Err(Error::InvalidVertex {
                level: v.level,
                index: v.index,
            })
        }
    }

    pub fn parent(&self, v: VertexId) -> Result<VertexId> {
        match v.level {
            0 => Err(Error::RootHasNoParent),
            1 => Ok(VertexId::ROOT),
            n => Ok(VertexId::new(n - 1, v.index / self.q)),
        }
    }

    pub fn children(&self, v: VertexId) -> Vec<VertexId> {
        if v.is_root() {
            (0..=self.q).map(|j| VertexId::new(1, j)).collect()
        } else {
            (0..self.q)
                .map(|j| VertexId::new(v.level + 1, v.index * self.q + j))
                .collect()
        }
    }

    /// Vertices of level `n` in index order. Refuses with `LevelTooLarge`
    /// when the level has more than `cap` vertices; dense enumeration is
    /// never truncated silently.
    pub fn enumerate_level(&self, n: u64, cap: u64) -> Result<impl Iterator<Item = VertexId>> {
        let count = self.level_count_within(n, cap)?;
        Ok((0..count).map(move |i| VertexId::new(n, i)))
    }

    /// `level_size(n)` as `u64` if it is `<= cap`, else `LevelTooLarge`.
    pub fn level_count_within(&self, n: u64, cap: u64) -> Result<u64> {
        // Cheap log-domain screen so absurd depths never materialize a BigUint.
        let log_cap = (cap as f64).ln() + 1.0;
        if self.log_level_size::<f64>(n) > log_cap {
            return Err(Error::LevelTooLarge {
                level: n,
                size: self.level_size(n),
                cap,
            });
        }
        let size = self.level_size(n);
        match size.to_u64() {
            Some(s) if s <= cap => Ok(s),
            _ => Err(Error::LevelTooLarge {
                level: n,
                size,
                cap,
            }),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::DEFAULT_CAP;
    use proptest::prelude::*;

    #[test]
    fn level_sizes() {
        let geo = TreeGeometry::new(3).unwrap();
        assert_eq!(geo.level_size(0), BigUint::from(1u32));
        assert_eq!(geo.level_size(2), BigUint::from(12u32));
        let geo = TreeGeometry::new(1).unwrap();
        assert_eq!(geo.level_size(5), BigUint::from(2u32));
    }

    #[test]
    fn level_size_recurrence() {
        for q in [1u64, 2, 3, 5] {
            let geo = TreeGeometry::new(q).unwrap();
            assert_eq!(geo.level_size(1), BigUint::from(q + 1));
            for n in 2..20 {
                assert_eq!(geo.level_size(n), geo.level_size(n - 1) * q);
            }
        }
    }

    #[test]
    fn log_level_size_matches_exact() {
        // q=2, n=40: compare against the arbitrary-precision value.
        let geo = TreeGeometry::new(2).unwrap();
        let expected = 3f64.ln() + 39.0 * 2f64.ln();
        assert!((geo.log_level_size::<f64>(40) - expected).abs() < 1e-12);
        for q in [1u64, 2, 3] {
            let geo = TreeGeometry::new(q).unwrap();
            for n in 0..30 {
                let exact = geo.level_size(n).to_f64().unwrap();
                if exact < 2f64.powi(53) {
                    let rel = (geo.log_level_size::<f64>(n).exp() - exact).abs() / exact;
                    assert!(rel < 1e-12, "q={q} n={n} rel={rel}");
                }
            }
        }
        assert_eq!(geo.log_level_size::<f64>(0), 0.0);
        let geo = TreeGeometry::new(3).unwrap();
        assert!((geo.log_level_size::<f64>(2) - 12f64.ln()).abs() < 1e-14);
    }

    #[test]
    fn parent_arithmetic() {
        let geo = TreeGeometry::new(3).unwrap();
        assert_eq!(geo.parent(VertexId::new(1, 3)).unwrap(), VertexId::ROOT);
        assert_eq!(
            geo.parent(VertexId::new(2, 7)).unwrap(),
            VertexId::new(1, 2)
        );
        assert!(matches!(
            geo.parent(VertexId::ROOT),
            Err(Error::RootHasNoParent)
        ));
    }

    #[test]
    fn children_blocks() {
        let geo = TreeGeometry::new(3).unwrap();
        assert_eq!(
            geo.children(VertexId::ROOT),
            vec![
                VertexId::new(1, 0),
                VertexId::new(1, 1),
                VertexId::new(1, 2),
                VertexId::new(1, 3)
            ]
        );
        assert_eq!(
            geo.children(VertexId::new(1, 2)),
            vec![
                VertexId::new(2, 6),
                VertexId::new(2, 7),
                VertexId::new(2, 8)
            ]
        );
        let geo = TreeGeometry::new(1).unwrap();
        assert_eq!(geo.children(VertexId::new(4, 1)), vec![VertexId::new(5, 1)]);
    }

    #[test]
    fn enumerate_level_counts_and_cap() {
        let geo = TreeGeometry::new(3).unwrap();
        assert_eq!(geo.enumerate_level(1, DEFAULT_CAP).unwrap().count(), 4);
        let geo2 = TreeGeometry::new(2).unwrap();
        assert_eq!(geo2.enumerate_level(3, DEFAULT_CAP).unwrap().count(), 12);
        assert!(matches!(
            geo.enumerate_level(50, DEFAULT_CAP),
            Err(Error::LevelTooLarge { level: 50, .. })
        ));
    }

    #[test]
    fn leftmost_path_is_a_path() {
        let geo = TreeGeometry::new(3).unwrap();
        assert_eq!(leftmost_path_vertex(0), VertexId::ROOT);
        assert_eq!(leftmost_path_vertex(5), VertexId::new(5, 0));
        assert_eq!(
            geo.parent(leftmost_path_vertex(7)).unwrap(),
            leftmost_path_vertex(6)
        );
    }

    proptest! {
        #[test]
        fn parent_inverts_children(q in prop::sample::select(vec![1u64, 2, 3, 5]),
                                   level in 0u64..12, seed in 0u64..1000) {
            let geo = TreeGeometry::new(q).unwrap();
            let size = geo.level_count_within(level, u64::MAX).unwrap_or(u64::MAX);
            let v = VertexId::new(level, seed % size.max(1));
            for child in geo.children(v) {
                prop_assert_eq!(geo.parent(child).unwrap(), v);
                prop_assert!(geo.contains(child));
            }
        }

        #[test]
        fn children_counts_sum_to_next_level(q in prop::sample::select(vec![1u64, 2, 3, 5]),
                                             n in 1u64..12) {
            let geo = TreeGeometry::new(q).unwrap();
            // level n vertices = sum of child counts over level n-1
            let parents = geo.level_size(n - 1);
            let expected = if n == 1 {
                BigUint::from(q + 1)
            } else {
                parents * q
            };
            prop_assert_eq!(geo.level_size(n), expected);
        }
    }
}
