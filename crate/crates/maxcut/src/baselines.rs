//! The four comparison heuristics: EC, DEC, SG, and SG3.
//!
//! EC ("worst-out") repeatedly contracts the minimum-weight edge, summing
//! parallel weights, until two super-vertices remain. DEC ("best-in")
//! contracts the maximum positive edge in a differencing way until no
//! positive weight is left. SG and SG3 grow the two sides one vertex at a
//! time, placing each vertex opposite its heavier connection.

use crate::contraction::{ContractionState, ContractionTrace, SurvivorRule, TraceStep};
use crate::error::SolveError;
use crate::graph::{CutAssignment, Weight, WeightMatrix};

/// Direction rule for DEC's differencing contraction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum DecDirection {
    /// Keep the endpoint whose survival leaves the larger total active
    /// weight; ties keep the smaller class id.
    #[default]
    MaxTotal,
    /// Always keep the smaller class id.
    KeepSmaller,
    /// Always keep the larger class id.
    KeepLarger,
}

/// Visiting order for the sequential greedy heuristic.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub enum SgOrder {
    /// Natural order `0..n`.
    #[default]
    Natural,
    /// Explicit permutation of `0..n`.
    Explicit(Vec<usize>),
    /// Marker for the adaptive order used by SG3; rejected by `sg_solve`.
    Adaptive,
}

/// Result of an EC run. `final_edge_weight` is the weight of the last
/// remaining edge, which equals the recomputed cut weight.
#[derive(Debug, Clone)]
pub struct EcOutcome<W: Weight> {
    pub cut: CutAssignment<W>,
    pub final_edge_weight: W,
    pub trace: ContractionTrace<W>,
}

/// Result of a DEC run. `minus_parity[v]` is the number of minus signs,
/// mod 2, that vertex `v` accumulated in the contraction labels; even
/// parities form U and odd parities form D.
#[derive(Debug, Clone)]
pub struct DecOutcome<W: Weight> {
    pub cut: CutAssignment<W>,
    pub minus_parity: Vec<u8>,
    pub trace: ContractionTrace<W>,
}

/// Tracks which original vertices each active row represents.
struct ClassMembers {
    members: Vec<Vec<usize>>,
}

impl ClassMembers {
    fn new(n: usize) -> Self {
        ClassMembers { members: (0..n).map(|v| vec![v]).collect() }
    }

    fn merge(&mut self, survivor: usize, removed: usize) {
        let moved = std::mem::take(&mut self.members[removed]);
        self.members[survivor].extend(moved);
    }
}

/// Edge contraction: contract the minimum-weight edge (additive fold) until
/// two super-vertices remain. The two classes are the two sides; the class
/// containing vertex 0 is reported as U.
pub fn ec_solve<W: Weight>(matrix: &WeightMatrix<W>) -> Result<EcOutcome<W>, SolveError> {
    let n = matrix.n();
    if n < 2 {
        return Err(SolveError::TooFewVertices { n, need: 2 });
    }
    let mut state = ContractionState::new(matrix);
    let mut classes = ClassMembers::new(n);
    let mut trace = ContractionTrace::default();
    while state.active_count() > 2 {
        let (i, j, weight) = state
            .scan_edges(|w, key, bw, bkey| w < bw || (w == bw && key < bkey))
            .expect("more than two active vertices imply an active edge");
        let (survivor, removed) = state.split_pair(i, j, SurvivorRule::SmallIndex);
        state.fold_into(survivor, removed, 1);
        classes.merge(survivor, removed);
        trace.push(TraceStep { i: i.min(j), j: i.max(j), weight, sign: 1, removed, survivor });
    }
    let active: Vec<usize> = state.active_vertices().collect();
    let final_edge_weight = state.weight(active[0], active[1]);
    // The class holding the smallest original vertex (always vertex 0) is U.
    let (u_row, d_row) = if state.class_id(active[0]) < state.class_id(active[1]) {
        (active[0], active[1])
    } else {
        (active[1], active[0])
    };
    let mut z = vec![0i8; n];
    for &v in &classes.members[u_row] {
        z[v] = 1;
    }
    for &v in &classes.members[d_row] {
        z[v] = -1;
    }
    let cut = CutAssignment::from_valid_signs(matrix, z);
    Ok(EcOutcome { cut, final_edge_weight, trace })
}

/// Differencing edge contraction: contract the maximum positive edge with a
/// subtractive fold, direction per `direction`, until no positive weight
/// remains. Vertices with an even number of minus signs in their contraction
/// labels go to U, odd to D.
pub fn dec_solve<W: Weight>(matrix: &WeightMatrix<W>, direction: DecDirection) -> DecOutcome<W> {
    let n = matrix.n();
    let mut state = ContractionState::new(matrix);
    let mut classes = ClassMembers::new(n);
    let mut parity = vec![0u8; n];
    let mut trace = ContractionTrace::default();
    loop {
        let best = state.scan_edges(|w, key, bw, bkey| w > bw || (w == bw && key < bkey));
        let (i, j, weight) = match best {
            Some(found) => found,
            None => break,
        };
        if weight <= state.epsilon() {
            break;
        }
        let (survivor, removed) = pick_dec_direction(&state, i, j, direction);
        state.fold_into(survivor, removed, -1);
        for &v in &classes.members[removed] {
            parity[v] ^= 1;
        }
        classes.merge(survivor, removed);
        trace.push(TraceStep { i: i.min(j), j: i.max(j), weight, sign: -1, removed, survivor });
    }
    let z: Vec<i8> = parity.iter().map(|&p| if p == 0 { 1 } else { -1 }).collect();
    let cut = CutAssignment::from_valid_signs(matrix, z);
    DecOutcome { cut, minus_parity: parity, trace }
}

/// Choose `(survivor, removed)` for a DEC step on edge `(i, j)`.
fn pick_dec_direction<W: Weight>(
    state: &ContractionState<W>,
    i: usize,
    j: usize,
    direction: DecDirection,
) -> (usize, usize) {
    let smaller_first = |a: usize, b: usize| {
        if state.class_id(a) < state.class_id(b) {
            (a, b)
        } else {
            (b, a)
        }
    };
    match direction {
        DecDirection::KeepSmaller => smaller_first(i, j),
        DecDirection::KeepLarger => {
            let (s, r) = smaller_first(i, j);
            (r, s)
        }
        DecDirection::MaxTotal => {
            // Keeping endpoint a makes the new total
            //   T - w_ij - 2 * sum_k w[b][k]
            // so the survivor is the endpoint with the larger row sum.
            let sum_i = state.row_sum_excluding(i, j);
            let sum_j = state.row_sum_excluding(j, i);
            if sum_i > sum_j {
                (i, j)
            } else if sum_j > sum_i {
                (j, i)
            } else {
                smaller_first(i, j)
            }
        }
    }
}

/// Sequential greedy: visit vertices in `order` and put each on the side
/// opposite its heavier connection (ties go to D).
pub fn sg_solve<W: Weight>(
    matrix: &WeightMatrix<W>,
    order: &SgOrder,
) -> Result<CutAssignment<W>, SolveError> {
    let n = matrix.n();
    let sequence: Vec<usize> = match order {
        SgOrder::Natural => (0..n).collect(),
        SgOrder::Explicit(seq) => {
            let mut seen = vec![false; n];
            if seq.len() != n {
                return Err(SolveError::NotAPermutation);
            }
            for &v in seq {
                if v >= n || seen[v] {
                    return Err(SolveError::NotAPermutation);
                }
                seen[v] = true;
            }
            seq.clone()
        }
        SgOrder::Adaptive => return Err(SolveError::AdaptiveOrder),
    };
    let mut z = vec![0i8; n];
    let mut to_u = vec![W::ZERO; n];
    let mut to_d = vec![W::ZERO; n];
    for &v in &sequence {
        z[v] = if to_u[v] < to_d[v] { 1 } else { -1 };
        for k in 0..n {
            if z[k] == 0 {
                if z[v] == 1 {
                    to_u[k] += matrix.weight(v, k);
                } else {
                    to_d[k] += matrix.weight(v, k);
                }
            }
        }
    }
    Ok(CutAssignment::from_valid_signs(matrix, z))
}

/// SG3: at each step assign the unplaced vertex with the largest
/// `|w(i, U) - w(i, D)|` (ties to the smallest index), using the SG rule.
pub fn sg3_solve<W: Weight>(matrix: &WeightMatrix<W>) -> CutAssignment<W> {
    let n = matrix.n();
    let mut z = vec![0i8; n];
    let mut to_u = vec![W::ZERO; n];
    let mut to_d = vec![W::ZERO; n];
    for _ in 0..n {
        let mut pick = None;
        let mut pick_score = W::ZERO;
        for v in 0..n {
            if z[v] != 0 {
                continue;
            }
            let score = (to_u[v] - to_d[v]).abs();
            if pick.is_none() || score > pick_score {
                pick = Some(v);
                pick_score = score;
            }
        }
        let v = pick.expect("an unassigned vertex remains");
        z[v] = if to_u[v] < to_d[v] { 1 } else { -1 };
        for k in 0..n {
            if z[k] == 0 {
                if z[v] == 1 {
                    to_u[k] += matrix.weight(v, k);
                } else {
                    to_d[k] += matrix.weight(v, k);
                }
            }
        }
    }
    CutAssignment::from_valid_signs(matrix, z)
}
