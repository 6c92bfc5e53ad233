//! Dense complete-graph representation and cut evaluation.
//!
//! Every instance is stored as a symmetric `n x n` weight matrix with a zero
//! diagonal; pairs missing from the input are genuine zero-weight edges.
//! Two arithmetic modes exist: exact 64-bit integers (`WeightMatrix<i64>`)
//! and reals (`WeightMatrix<f64>`) with a per-matrix zero threshold.

use std::fmt;
use std::ops::{Add, AddAssign, Neg, Sub, SubAssign};

use crate::error::GraphError;

/// Factor by which the sum of absolute integer weights must stay below
/// `i64::MAX`. Every value a solver ever forms is a signed sum of distinct
/// original edge weights, so bounding the absolute sum at construction keeps
/// all downstream arithmetic exact.
const INT_HEADROOM: i64 = 8;

/// Relative zero threshold for real-mode matrices: `eps = REAL_EPS_SCALE * max |w|`.
const REAL_EPS_SCALE: f64 = 1e-9;

/// Scalar weight type used by the solvers: exact integers or reals.
pub trait Weight:
    Copy
    + PartialOrd
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Neg<Output = Self>
    + AddAssign
    + SubAssign
{
    const ZERO: Self;
    /// True for the integer-exact mode.
    const EXACT: bool;

    fn abs(self) -> Self;
    /// `self` negated when `sign < 0`. Signs are always exactly -1 or +1.
    fn signed(self, sign: i8) -> Self {
        if sign < 0 {
            -self
        } else {
            self
        }
    }
    /// Order-preserving `u64` key for non-negative values; drives the heap engine.
    fn order_key(self) -> u64;
    /// Raw bit pattern, used for exact staleness checks in the lazy heap.
    fn to_bits(self) -> u64;
    fn to_f64(self) -> f64;
    /// Overflow-aware addition used by construction-time validation.
    fn checked_add(self, rhs: Self) -> Option<Self>;
    fn is_finite(self) -> bool;
    /// Map a CLI-level epsilon override into this mode. Integer mode always
    /// compares to zero exactly, so the override is ignored there.
    fn epsilon_from_f64(eps: f64) -> Self;
}

impl Weight for i64 {
    const ZERO: Self = 0;
    const EXACT: bool = true;

    fn abs(self) -> Self {
        i64::abs(self)
    }
    fn order_key(self) -> u64 {
        debug_assert!(self >= 0);
        self as u64
    }
    fn to_bits(self) -> u64 {
        self as u64
    }
    fn to_f64(self) -> f64 {
        self as f64
    }
    fn checked_add(self, rhs: Self) -> Option<Self> {
        i64::checked_add(self, rhs)
    }
    fn is_finite(self) -> bool {
        true
    }
    fn epsilon_from_f64(_eps: f64) -> Self {
        0
    }
}

impl Weight for f64 {
    const ZERO: Self = 0.0;
    const EXACT: bool = false;

    fn abs(self) -> Self {
        f64::abs(self)
    }
    fn order_key(self) -> u64 {
        debug_assert!(self >= 0.0);
        // IEEE-754 bit patterns of non-negative finite floats sort like the floats.
        self.to_bits()
    }
    fn to_bits(self) -> u64 {
        f64::to_bits(self)
    }
    fn to_f64(self) -> f64 {
        self
    }
    fn checked_add(self, rhs: Self) -> Option<Self> {
        let sum = self + rhs;
        sum.is_finite().then_some(sum)
    }
    fn is_finite(self) -> bool {
        f64::is_finite(self)
    }
    fn epsilon_from_f64(eps: f64) -> Self {
        eps
    }
}

/// Symmetric edge-weight matrix of a complete graph.
///
/// Immutable after construction and freely shareable across threads; the
/// solvers copy the weights into private working state.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightMatrix<W: Weight> {
    n: usize,
    w: Vec<W>,
    epsilon: W,
    names: Option<Vec<String>>,
}

impl<W: Weight> WeightMatrix<W> {
    /// Build from an edge list. Endpoints are 0-based and must satisfy
    /// `i < j`; unlisted pairs get weight 0. (The MCUT and TSPLIB file
    /// formats are 1-based; their parsers shift indices before calling this.)
    pub fn from_edges(n: usize, edges: &[(usize, usize, W)]) -> Result<Self, GraphError> {
        if n < 1 {
            return Err(GraphError::EmptyGraph);
        }
        let mut w = vec![W::ZERO; n * n];
        let mut seen = vec![false; n * n];
        for &(i, j, weight) in edges {
            if i >= n {
                return Err(GraphError::IndexOutOfRange { index: i, n });
            }
            if j >= n {
                return Err(GraphError::IndexOutOfRange { index: j, n });
            }
            if i >= j {
                return Err(GraphError::EdgeOrder { i, j });
            }
            if seen[i * n + j] {
                return Err(GraphError::DuplicateEdge { i, j });
            }
            seen[i * n + j] = true;
            w[i * n + j] = weight;
            w[j * n + i] = weight;
        }
        Self::finalize(n, w)
    }

    /// Build from a dense row-major `n x n` array, validating symmetry and a
    /// zero diagonal.
    pub fn from_dense(n: usize, w: Vec<W>) -> Result<Self, GraphError> {
        if n < 1 {
            return Err(GraphError::EmptyGraph);
        }
        if w.len() != n * n {
            return Err(GraphError::LengthMismatch { expected: n * n, got: w.len() });
        }
        for i in 0..n {
            if w[i * n + i] != W::ZERO {
                return Err(GraphError::NonZeroDiagonal { i });
            }
            for j in (i + 1)..n {
                if w[i * n + j] != w[j * n + i] {
                    return Err(GraphError::AsymmetricEntry { i, j });
                }
            }
        }
        Self::finalize(n, w)
    }

    fn finalize(n: usize, w: Vec<W>) -> Result<Self, GraphError> {
        let mut abs_sum = W::ZERO;
        let mut max_abs = W::ZERO;
        for i in 0..n {
            for j in (i + 1)..n {
                let v = w[i * n + j];
                if !v.is_finite() {
                    return Err(GraphError::NonFiniteWeight);
                }
                abs_sum = v.abs().checked_add(abs_sum).ok_or(GraphError::WeightOverflow)?;
                if v.abs() > max_abs {
                    max_abs = v.abs();
                }
            }
        }
        if W::EXACT {
            // Headroom so that signed sums of original weights (what every
            // solver computes) can never overflow.
            let limit = i64::MAX / INT_HEADROOM;
            if abs_sum.to_f64() > limit as f64 {
                return Err(GraphError::WeightOverflow);
            }
        }
        let epsilon = W::epsilon_from_f64(REAL_EPS_SCALE * max_abs.to_f64());
        Ok(WeightMatrix { n, w, epsilon, names: None })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn weight(&self, i: usize, j: usize) -> W {
        self.w[i * self.n + j]
    }

    pub(crate) fn raw(&self) -> &[W] {
        &self.w
    }

    /// Zero threshold used wherever a weight is compared to 0.
    /// Always 0 in integer mode; defaults to `1e-9 * max |w|` in real mode.
    pub fn epsilon(&self) -> W {
        self.epsilon
    }

    pub fn with_epsilon(mut self, epsilon: W) -> Self {
        self.epsilon = epsilon;
        self
    }

    pub fn names(&self) -> Option<&[String]> {
        self.names.as_deref()
    }

    pub fn with_names(mut self, names: Vec<String>) -> Result<Self, GraphError> {
        if names.len() != self.n {
            return Err(GraphError::LengthMismatch { expected: self.n, got: names.len() });
        }
        self.names = Some(names);
        Ok(self)
    }

    /// Sum of all edge weights, the reference denominator for cut ratios.
    pub fn total_weight(&self) -> W {
        let mut total = W::ZERO;
        for i in 0..self.n {
            for j in (i + 1)..self.n {
                total += self.weight(i, j);
            }
        }
        total
    }

    /// Weight of the cut induced by `z`: the sum of `w[i][j]` over pairs with
    /// `z[i] != z[j]`. Entries of `z` must be exactly -1 or +1.
    pub fn cut_weight(&self, z: &[i8]) -> Result<W, GraphError> {
        validate_signs(self.n, z)?;
        Ok(self.cut_weight_unchecked(z))
    }

    pub(crate) fn cut_weight_unchecked(&self, z: &[i8]) -> W {
        debug_assert!(validate_signs(self.n, z).is_ok());
        let mut cut = W::ZERO;
        for i in 0..self.n {
            for j in (i + 1)..self.n {
                if z[i] != z[j] {
                    cut += self.weight(i, j);
                }
            }
        }
        cut
    }

    /// `(w(i, U), w(i, D))`: the total weight connecting `i` to each side.
    /// `i` must not be inside `U` or `D`; the two sides must be disjoint.
    pub fn side_weights(
        &self,
        i: usize,
        side_u: &[usize],
        side_d: &[usize],
    ) -> Result<(W, W), GraphError> {
        if i >= self.n {
            return Err(GraphError::IndexOutOfRange { index: i, n: self.n });
        }
        if side_u.contains(&i) || side_d.contains(&i) {
            return Err(GraphError::VertexInSide { vertex: i });
        }
        let sum_side = |side: &[usize]| -> Result<W, GraphError> {
            let mut s = W::ZERO;
            for &v in side {
                if v >= self.n {
                    return Err(GraphError::IndexOutOfRange { index: v, n: self.n });
                }
                s += self.weight(i, v);
            }
            Ok(s)
        };
        Ok((sum_side(side_u)?, sum_side(side_d)?))
    }

    /// Largest absolute edge weight.
    pub fn max_abs_weight(&self) -> W {
        let mut best = W::ZERO;
        for i in 0..self.n {
            for j in (i + 1)..self.n {
                let a = self.weight(i, j).abs();
                if a > best {
                    best = a;
                }
            }
        }
        best
    }
}

fn validate_signs(n: usize, z: &[i8]) -> Result<(), GraphError> {
    if z.len() != n {
        return Err(GraphError::LengthMismatch { expected: n, got: z.len() });
    }
    for (index, &value) in z.iter().enumerate() {
        if value != 1 && value != -1 {
            return Err(GraphError::InvalidSign { index, value });
        }
    }
    Ok(())
}

/// A vertex assignment `z: V -> {-1, +1}` together with its cut weight.
///
/// `U` is the set of vertices labeled +1 and `D` the set labeled -1; the
/// stored weight always equals the value recomputed from `z`.
#[derive(Debug, Clone, PartialEq)]
pub struct CutAssignment<W: Weight> {
    z: Vec<i8>,
    cut_weight: W,
}

impl<W: Weight> CutAssignment<W> {
    /// Validate `z` and compute its cut weight on `matrix`.
    pub fn compute(matrix: &WeightMatrix<W>, z: Vec<i8>) -> Result<Self, GraphError> {
        let cut_weight = matrix.cut_weight(&z)?;
        Ok(CutAssignment { z, cut_weight })
    }

    /// Internal constructor for signs produced by the solvers themselves.
    pub(crate) fn from_valid_signs(matrix: &WeightMatrix<W>, z: Vec<i8>) -> Self {
        let cut_weight = matrix.cut_weight_unchecked(&z);
        CutAssignment { z, cut_weight }
    }

    pub fn signs(&self) -> &[i8] {
        &self.z
    }

    pub fn cut_weight(&self) -> W {
        self.cut_weight
    }

    /// Vertices labeled +1.
    pub fn side_u(&self) -> Vec<usize> {
        self.z.iter().enumerate().filter(|(_, &s)| s == 1).map(|(v, _)| v).collect()
    }

    /// Vertices labeled -1.
    pub fn side_d(&self) -> Vec<usize> {
        self.z.iter().enumerate().filter(|(_, &s)| s == -1).map(|(v, _)| v).collect()
    }

    /// True when the stored weight matches a from-scratch recomputation.
    pub fn is_self_consistent(&self, matrix: &WeightMatrix<W>) -> bool {
        matrix.cut_weight(&self.z).map(|w| w == self.cut_weight).unwrap_or(false)
    }
}

/// A parsed instance in either arithmetic mode.
#[derive(Debug, Clone)]
pub enum DynWeightMatrix {
    Int(WeightMatrix<i64>),
    Real(WeightMatrix<f64>),
}

impl DynWeightMatrix {
    pub fn n(&self) -> usize {
        match self {
            DynWeightMatrix::Int(m) => m.n(),
            DynWeightMatrix::Real(m) => m.n(),
        }
    }

    pub fn is_integer(&self) -> bool {
        matches!(self, DynWeightMatrix::Int(_))
    }

    pub fn total_weight_f64(&self) -> f64 {
        match self {
            DynWeightMatrix::Int(m) => m.total_weight() as f64,
            DynWeightMatrix::Real(m) => m.total_weight(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triangle() -> WeightMatrix<i64> {
        WeightMatrix::from_edges(3, &[(0, 1, 1), (0, 2, 2), (1, 2, 3)]).unwrap()
    }

    #[test]
    fn from_edges_mirrors_entries() {
        let m = triangle();
        assert_eq!(m.weight(1, 2), 3);
        assert_eq!(m.weight(2, 1), 3);
        assert_eq!(m.weight(0, 0), 0);
    }

    #[test]
    fn from_edges_empty_edge_set() {
        let m = WeightMatrix::<i64>::from_edges(2, &[]).unwrap();
        assert_eq!(m.n(), 2);
        assert_eq!(m.weight(0, 1), 0);
        assert_eq!(m.total_weight(), 0);
    }

    #[test]
    fn from_edges_rejects_duplicates_and_bad_order() {
        let err = WeightMatrix::from_edges(3, &[(0, 1, 1), (0, 1, 5)]).unwrap_err();
        assert_eq!(err, GraphError::DuplicateEdge { i: 0, j: 1 });
        // A (j, i) re-listing of an existing pair violates the i < j rule.
        let err = WeightMatrix::from_edges(3, &[(0, 1, 1), (1, 0, 5)]).unwrap_err();
        assert_eq!(err, GraphError::EdgeOrder { i: 1, j: 0 });
        assert!(WeightMatrix::from_edges(3, &[(0, 3, 1i64)]).is_err());
        assert!(WeightMatrix::<i64>::from_edges(0, &[]).is_err());
    }

    #[test]
    fn cut_weight_examples() {
        let k2 = WeightMatrix::from_edges(2, &[(0, 1, 5)]).unwrap();
        assert_eq!(k2.cut_weight(&[1, -1]).unwrap(), 5);
        let m = triangle();
        assert_eq!(m.cut_weight(&[1, 1, 1]).unwrap(), 0);
        // z = (+1, +1, -1) cuts w13 and w23.
        assert_eq!(m.cut_weight(&[1, 1, -1]).unwrap(), 5);
    }

    #[test]
    fn cut_weight_rejects_bad_signs() {
        let m = triangle();
        assert_eq!(
            m.cut_weight(&[1, -1]).unwrap_err(),
            GraphError::LengthMismatch { expected: 3, got: 2 }
        );
        assert_eq!(
            m.cut_weight(&[1, 0, -1]).unwrap_err(),
            GraphError::InvalidSign { index: 1, value: 0 }
        );
    }

    #[test]
    fn total_weight_examples() {
        assert_eq!(triangle().total_weight(), 6);
        let zero = WeightMatrix::<i64>::from_edges(4, &[]).unwrap();
        assert_eq!(zero.total_weight(), 0);
    }

    #[test]
    fn side_weights_examples() {
        let m = triangle();
        // i = 3, U = {2}, D = {1} in 1-based terms.
        assert_eq!(m.side_weights(2, &[1], &[0]).unwrap(), (3, 2));
        assert_eq!(m.side_weights(2, &[], &[]).unwrap(), (0, 0));
        assert_eq!(m.side_weights(1, &[0, 2], &[]).unwrap(), (4, 0));
        assert_eq!(
            m.side_weights(1, &[1], &[0]).unwrap_err(),
            GraphError::VertexInSide { vertex: 1 }
        );
    }

    #[test]
    fn integer_overflow_detected_at_construction() {
        let big = i64::MAX / 2;
        let err = WeightMatrix::from_edges(3, &[(0, 1, big), (0, 2, big), (1, 2, big)]);
        assert_eq!(err.unwrap_err(), GraphError::WeightOverflow);
    }

    #[test]
    fn real_mode_epsilon_scales_with_weights() {
        let m = WeightMatrix::from_edges(2, &[(0, 1, 1000.0)]).unwrap();
        assert!((m.epsilon() - 1e-6).abs() < 1e-18);
        assert!(WeightMatrix::from_edges(2, &[(0, 1, f64::NAN)]).is_err());
        assert!(WeightMatrix::from_edges(2, &[(0, 1, f64::INFINITY)]).is_err());
    }

    #[test]
    fn from_dense_validates() {
        let m = WeightMatrix::from_dense(2, vec![0, 7, 7, 0]).unwrap();
        assert_eq!(m.weight(0, 1), 7);
        assert!(matches!(
            WeightMatrix::from_dense(2, vec![0, 1, 2, 0]).unwrap_err(),
            GraphError::AsymmetricEntry { .. }
        ));
        assert!(matches!(
            WeightMatrix::from_dense(2, vec![3, 1, 1, 0]).unwrap_err(),
            GraphError::NonZeroDiagonal { .. }
        ));
    }

    #[test]
    fn assignment_sides_and_consistency() {
        let m = triangle();
        let cut = CutAssignment::compute(&m, vec![1, 1, -1]).unwrap();
        assert_eq!(cut.cut_weight(), 5);
        assert_eq!(cut.side_u(), vec![0, 1]);
        assert_eq!(cut.side_d(), vec![2]);
        assert!(cut.is_self_consistent(&m));
    }
}
