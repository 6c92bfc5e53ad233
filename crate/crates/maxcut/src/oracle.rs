//! Brute-force exact Max-Cut for small instances.
//!
//! Enumerates the half-space with `z_1` fixed to +1 (cuts are invariant under
//! a global flip) in Gray-code order, updating the cut weight incrementally
//! on each single-vertex flip. Reaches n = 24 within seconds.

use crate::error::SolveError;
use crate::graph::{CutAssignment, Weight, WeightMatrix};

/// Default size limit for [`brute_force`].
pub const DEFAULT_MAX_N: usize = 24;

/// Hard cap: beyond this the enumeration count itself becomes unreasonable.
const HARD_MAX_N: usize = 48;

/// Ground-truth result of an exhaustive search.
#[derive(Debug, Clone)]
pub struct OracleResult<W: Weight> {
    /// One optimal assignment: the lexicographically smallest maximizer with
    /// `z_1 = +1` (entries ordered -1 < +1).
    pub witness: CutAssignment<W>,
    /// Number of assignments examined: `2^(n-1)`.
    pub enumerated: u64,
}

impl<W: Weight> OracleResult<W> {
    pub fn optimal_weight(&self) -> W {
        self.witness.cut_weight()
    }
}

/// Exhaustive Max-Cut with incremental Gray-code evaluation.
pub fn brute_force<W: Weight>(
    matrix: &WeightMatrix<W>,
    max_n: usize,
) -> Result<OracleResult<W>, SolveError> {
    let n = matrix.n();
    let limit = max_n.min(HARD_MAX_N);
    if n > limit {
        return Err(SolveError::TooLarge { n, max: limit });
    }
    let w = matrix.raw();
    let mut z = vec![1i8; n];
    let mut cut = W::ZERO;
    let mut best = cut;
    let mut best_z = z.clone();
    let steps = 1u64 << (n - 1);
    for step in 1..steps {
        // Flip the vertex selected by the Gray-code ruler sequence.
        let v = step.trailing_zeros() as usize + 1;
        let mut dot = W::ZERO;
        for u in 0..n {
            dot += w[v * n + u].signed(z[u]);
        }
        cut += dot.signed(z[v]);
        z[v] = -z[v];
        if cut > best || (cut == best && lex_less(&z, &best_z)) {
            best = cut;
            best_z.copy_from_slice(&z);
        }
    }
    Ok(OracleResult {
        witness: CutAssignment::from_valid_signs(matrix, best_z),
        enumerated: steps,
    })
}

/// Reference path: full recomputation per assignment, no incremental tricks.
/// Kept for cross-checking the Gray-code walk on small instances.
pub fn brute_force_reference<W: Weight>(
    matrix: &WeightMatrix<W>,
) -> Result<OracleResult<W>, SolveError> {
    let n = matrix.n();
    if n > 16 {
        return Err(SolveError::TooLarge { n, max: 16 });
    }
    let steps = 1u64 << (n - 1);
    let mut best: Option<(W, Vec<i8>)> = None;
    for mask in 0..steps {
        let mut z = vec![1i8; n];
        for (bit, slot) in z.iter_mut().skip(1).enumerate() {
            if (mask >> bit) & 1 == 1 {
                *slot = -1;
            }
        }
        let cut = matrix.cut_weight_unchecked(&z);
        let replace = match &best {
            None => true,
            Some((bw, bz)) => cut > *bw || (cut == *bw && lex_less(&z, bz)),
        };
        if replace {
            best = Some((cut, z));
        }
    }
    let (_, z) = best.expect("at least one assignment enumerated");
    Ok(OracleResult { witness: CutAssignment::from_valid_signs(matrix, z), enumerated: steps })
}

fn lex_less(a: &[i8], b: &[i8]) -> bool {
    for (x, y) in a.iter().zip(b) {
        if x != y {
            return x < y;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_optimum() {
        let m = WeightMatrix::from_edges(3, &[(0, 1, 1), (0, 2, 2), (1, 2, 3)]).unwrap();
        let res = brute_force(&m, DEFAULT_MAX_N).unwrap();
        assert_eq!(res.optimal_weight(), 5);
        assert_eq!(res.witness.side_u(), vec![0, 1]);
        assert_eq!(res.witness.side_d(), vec![2]);
        assert_eq!(res.enumerated, 4);
    }

    #[test]
    fn all_negative_optimum_is_empty_cut() {
        let m = WeightMatrix::from_edges(3, &[(0, 1, -4), (0, 2, -1), (1, 2, -9)]).unwrap();
        let res = brute_force(&m, DEFAULT_MAX_N).unwrap();
        assert_eq!(res.optimal_weight(), 0);
        assert_eq!(res.witness.signs(), &[1, 1, 1]);
    }

    #[test]
    fn single_vertex() {
        let m = WeightMatrix::<i64>::from_edges(1, &[]).unwrap();
        let res = brute_force(&m, DEFAULT_MAX_N).unwrap();
        assert_eq!(res.optimal_weight(), 0);
        assert_eq!(res.enumerated, 1);
    }

    #[test]
    fn size_limit_is_enforced() {
        let m = WeightMatrix::<i64>::from_edges(25, &[]).unwrap();
        assert_eq!(
            brute_force(&m, DEFAULT_MAX_N).unwrap_err(),
            SolveError::TooLarge { n: 25, max: 24 }
        );
    }

    #[test]
    fn incremental_agrees_with_reference() {
        // Deterministic small instances with mixed signs.
        for seed in 0..20i64 {
            let n = 3 + (seed % 7) as usize;
            let mut edges = Vec::new();
            let mut x = seed * 2654435761 + 1;
            for i in 0..n {
                for j in (i + 1)..n {
                    x = x.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                    edges.push((i, j, (x >> 33) % 41 - 20));
                }
            }
            let m = WeightMatrix::from_edges(n, &edges).unwrap();
            let fast = brute_force(&m, DEFAULT_MAX_N).unwrap();
            let slow = brute_force_reference(&m).unwrap();
            assert_eq!(fast.optimal_weight(), slow.optimal_weight());
            assert_eq!(fast.witness.signs(), slow.witness.signs());
            assert_eq!(fast.enumerated, slow.enumerated);
        }
    }
}
