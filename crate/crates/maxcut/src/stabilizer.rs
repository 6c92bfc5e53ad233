//! Stabilizer contraction heuristic.
//!
//! Repeatedly picks the active edge of maximum absolute weight. A negative
//! weight merges the endpoints onto the same side (additive fold, as in plain
//! edge contraction); a positive weight puts them on opposite sides
//! (differencing fold). Each pick records a signed edge; the picked edges
//! form a forest, and the final vertex labels are products of edge signs
//! along tree paths from a per-tree base vertex.
//!
//! Two engines are provided: a naive rescanning loop and a heap-backed one
//! with lazy invalidation. They implement the same selection rule and produce
//! identical outputs.

use std::collections::BinaryHeap;

use crate::contraction::{ContractionState, ContractionTrace, SurvivorRule, TraceStep};
use crate::error::SolveError;
use crate::graph::{CutAssignment, Weight, WeightMatrix};

/// Order among equal maximum-|w| edges, compared on canonical class-id pairs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum TieBreak {
    /// Lexicographically smallest pair wins.
    #[default]
    Lex,
    /// Lexicographically largest pair wins; provided to probe tie sensitivity.
    RevLex,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Engine {
    Naive,
    #[default]
    Sorted,
}

/// Knobs of a stabilizer run. The defaults give the documented reference
/// behavior; all choices only matter on tie-rich instances.
#[derive(Debug, Clone, Copy, Default)]
pub struct SolvePolicy {
    pub tie_break: TieBreak,
    pub survivor: SurvivorRule,
    pub engine: Engine,
    /// Zero-threshold override. Only real-mode matrices use it; integer mode
    /// always compares weights to zero exactly.
    pub epsilon: Option<f64>,
}

/// An edge of the stabilizer forest with its relative sign
/// (`z_i * z_j = sign` in any assignment consistent with the forest).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SignedForestEdge {
    pub i: usize,
    pub j: usize,
    pub sign: i8,
}

/// The acyclic set of signed edges collected by the contraction loop.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StabilizerForest {
    n: usize,
    edges: Vec<SignedForestEdge>,
}

impl StabilizerForest {
    /// Build a forest from explicit edges, validating indices and signs.
    /// Acyclicity is checked by [`propagate_signs`].
    pub fn new(n: usize, edges: Vec<SignedForestEdge>) -> Result<Self, SolveError> {
        for e in &edges {
            if e.i >= n || e.j >= n || e.i == e.j || (e.sign != 1 && e.sign != -1) {
                return Err(SolveError::InvalidForestEdge { i: e.i, j: e.j });
            }
        }
        Ok(StabilizerForest { n, edges })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[SignedForestEdge] {
        &self.edges
    }

    /// True when the edge set is acyclic (union-find check).
    pub fn is_acyclic(&self) -> bool {
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(parent: &mut [usize], mut v: usize) -> usize {
            while parent[v] != v {
                parent[v] = parent[parent[v]];
                v = parent[v];
            }
            v
        }
        for e in &self.edges {
            let (ri, rj) = (find(&mut parent, e.i), find(&mut parent, e.j));
            if ri == rj {
                return false;
            }
            parent[ri] = rj;
        }
        true
    }
}

/// Result of a stabilizer run.
#[derive(Debug, Clone)]
pub struct StabilizerOutcome<W: Weight> {
    pub cut: CutAssignment<W>,
    pub forest: StabilizerForest,
    pub trace: ContractionTrace<W>,
}

/// Run the stabilizer heuristic on `matrix` under `policy`.
pub fn solve<W: Weight>(
    matrix: &WeightMatrix<W>,
    policy: &SolvePolicy,
) -> Result<StabilizerOutcome<W>, SolveError> {
    let mut state = ContractionState::new(matrix);
    if let Some(eps) = policy.epsilon {
        state.set_epsilon(W::epsilon_from_f64(eps));
    }
    let (edges, trace) = match policy.engine {
        Engine::Naive => run_naive(&mut state, policy),
        Engine::Sorted => run_sorted(&mut state, policy),
    };
    let forest = StabilizerForest { n: matrix.n(), edges };
    let z = propagate_signs(&forest)?;
    let cut = CutAssignment::from_valid_signs(matrix, z);
    Ok(StabilizerOutcome { cut, forest, trace })
}

/// One validated contraction step with stabilizer semantics: both endpoints
/// must be active and the picked weight must be numerically non-zero. The
/// removed row is folded into the survivor with coefficient `sign`.
/// Returns `(removed, survivor)`.
pub fn contract_step<W: Weight>(
    state: &mut ContractionState<W>,
    picked: (usize, usize),
    sign: i8,
    rule: SurvivorRule,
) -> Result<(usize, usize), SolveError> {
    let (i, j) = picked;
    let n = state.n();
    if i >= n || !state.is_active(i) {
        return Err(SolveError::InactiveEndpoint { vertex: i });
    }
    if j >= n || !state.is_active(j) || i == j {
        return Err(SolveError::InactiveEndpoint { vertex: j });
    }
    if state.weight(i, j).abs() <= state.epsilon() {
        return Err(SolveError::ZeroPickWeight);
    }
    let (survivor, removed) = state.split_pair(i, j, rule);
    state.fold_into(survivor, removed, sign);
    Ok((removed, survivor))
}

fn pick_sign<W: Weight>(weight: W) -> i8 {
    if weight > W::ZERO {
        -1
    } else {
        1
    }
}

fn record_step<W: Weight>(
    state: &mut ContractionState<W>,
    edges: &mut Vec<SignedForestEdge>,
    trace: &mut ContractionTrace<W>,
    i: usize,
    j: usize,
    weight: W,
    rule: SurvivorRule,
) -> usize {
    let sign = pick_sign(weight);
    edges.push(SignedForestEdge { i: i.min(j), j: i.max(j), sign });
    let (survivor, removed) = state.split_pair(i, j, rule);
    state.fold_into(survivor, removed, sign);
    trace.push(TraceStep { i: i.min(j), j: i.max(j), weight, sign, removed, survivor });
    survivor
}

fn run_naive<W: Weight>(
    state: &mut ContractionState<W>,
    policy: &SolvePolicy,
) -> (Vec<SignedForestEdge>, ContractionTrace<W>) {
    let tie = policy.tie_break;
    let mut edges = Vec::new();
    let mut trace = ContractionTrace::default();
    while state.active_count() > 1 {
        let best = state.scan_edges(|w, key, bw, bkey| {
            let (a, b) = (w.abs(), bw.abs());
            a > b
                || (a == b
                    && match tie {
                        TieBreak::Lex => key < bkey,
                        TieBreak::RevLex => key > bkey,
                    })
        });
        let (i, j, weight) = match best {
            Some(found) => found,
            None => break,
        };
        if weight.abs() <= state.epsilon() {
            break;
        }
        record_step(state, &mut edges, &mut trace, i, j, weight, policy.survivor);
    }
    (edges, trace)
}

/// Heap entry ordered by `(abs weight, tie key)`. The tie key encodes the
/// canonical class-id pair so that the heap maximum is exactly the edge the
/// naive scan would pick.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct HeapEntry {
    abs_key: u64,
    tie_key: u64,
    i: u32,
    j: u32,
    weight_bits: u64,
}

impl Ord for HeapEntry {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        // Selection order is (abs, tie key); the rest only keeps the order
        // total and consistent with Eq.
        (self.abs_key, self.tie_key, self.i, self.j, self.weight_bits).cmp(&(
            other.abs_key,
            other.tie_key,
            other.i,
            other.j,
            other.weight_bits,
        ))
    }
}

impl PartialOrd for HeapEntry {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

fn tie_key(tie: TieBreak, pair: (u32, u32)) -> u64 {
    let encoded = ((pair.0 as u64) << 32) | pair.1 as u64;
    match tie {
        // Complement so that lexicographically smaller pairs sort higher.
        TieBreak::Lex => !encoded,
        TieBreak::RevLex => encoded,
    }
}

fn run_sorted<W: Weight>(
    state: &mut ContractionState<W>,
    policy: &SolvePolicy,
) -> (Vec<SignedForestEdge>, ContractionTrace<W>) {
    let tie = policy.tie_break;
    let n = state.n();
    let mut edges = Vec::new();
    let mut trace = ContractionTrace::default();
    let mut heap = BinaryHeap::with_capacity(n * n / 2);

    let push = |heap: &mut BinaryHeap<HeapEntry>, state: &ContractionState<W>, i: usize, j: usize| {
        let w = state.weight(i, j);
        if w.abs() > W::ZERO {
            heap.push(HeapEntry {
                abs_key: w.abs().order_key(),
                tie_key: tie_key(tie, state.canonical_pair(i, j)),
                i: i as u32,
                j: j as u32,
                weight_bits: w.to_bits(),
            });
        }
    };

    for i in 0..n {
        for j in (i + 1)..n {
            push(&mut heap, state, i, j);
        }
    }

    while let Some(entry) = heap.pop() {
        let (i, j) = (entry.i as usize, entry.j as usize);
        if !state.is_active(i) || !state.is_active(j) {
            continue;
        }
        let current = state.weight(i, j);
        if current.to_bits() != entry.weight_bits {
            continue; // stale value; a fresher entry exists
        }
        let expected_key = tie_key(tie, state.canonical_pair(i, j));
        if expected_key != entry.tie_key {
            // Value is current but the class id changed under it; re-key.
            heap.push(HeapEntry { tie_key: expected_key, ..entry });
            continue;
        }
        if current.abs() <= state.epsilon() {
            break; // valid maximum is numerically zero
        }
        let survivor = record_step(state, &mut edges, &mut trace, i, j, current, policy.survivor);
        for k in 0..n {
            if k != survivor && state.is_active(k) {
                push(&mut heap, state, survivor.min(k), survivor.max(k));
            }
        }
    }
    (edges, trace)
}

/// Compute vertex labels from a forest: the minimum-index vertex of every
/// tree gets +1 and every other vertex the product of edge signs along its
/// unique path from that base. Isolated vertices get +1.
pub fn propagate_signs(forest: &StabilizerForest) -> Result<Vec<i8>, SolveError> {
    let n = forest.n;
    for e in &forest.edges {
        if e.i >= n || e.j >= n || e.i == e.j || (e.sign != 1 && e.sign != -1) {
            return Err(SolveError::InvalidForestEdge { i: e.i, j: e.j });
        }
    }
    if !forest.is_acyclic() {
        return Err(SolveError::CyclicForest);
    }
    let mut adjacency = vec![Vec::new(); n];
    for e in &forest.edges {
        adjacency[e.i].push((e.j, e.sign));
        adjacency[e.j].push((e.i, e.sign));
    }
    let mut z = vec![0i8; n];
    let mut stack = Vec::new();
    for base in 0..n {
        if z[base] != 0 {
            continue;
        }
        // Ascending scan: the first unvisited vertex of a tree is its minimum.
        z[base] = 1;
        stack.push(base);
        while let Some(u) = stack.pop() {
            for &(v, sign) in &adjacency[u] {
                if z[v] == 0 {
                    z[v] = z[u] * sign;
                    stack.push(v);
                }
            }
        }
    }
    Ok(z)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::WeightMatrix;

    fn triangle() -> WeightMatrix<i64> {
        WeightMatrix::from_edges(3, &[(0, 1, 1), (0, 2, 2), (1, 2, 3)]).unwrap()
    }

    #[test]
    fn triangle_reaches_the_optimum() {
        let out = solve(&triangle(), &SolvePolicy::default()).unwrap();
        assert_eq!(out.cut.cut_weight(), 5);
        assert_eq!(out.cut.side_u(), vec![0, 1]);
        assert_eq!(out.cut.side_d(), vec![2]);
        // First pick is the heaviest edge (2,3) with a negative recorded sign.
        assert_eq!(out.trace.steps()[0].i, 1);
        assert_eq!(out.trace.steps()[0].j, 2);
        assert_eq!(out.trace.steps()[0].weight, 3);
        assert_eq!(out.trace.steps()[0].sign, -1);
        assert_eq!(out.trace.len(), 2);
        assert!(out.forest.is_acyclic());
    }

    #[test]
    fn all_negative_weights_merge_everything() {
        let m = WeightMatrix::from_edges(3, &[(0, 1, -1), (0, 2, -1), (1, 2, -1)]).unwrap();
        let out = solve(&m, &SolvePolicy::default()).unwrap();
        assert_eq!(out.cut.cut_weight(), 0);
        assert!(out.forest.edges().iter().all(|e| e.sign == 1));
        assert_eq!(out.cut.signs(), &[1, 1, 1]);
    }

    #[test]
    fn single_vertex_is_trivial() {
        let m = WeightMatrix::<i64>::from_edges(1, &[]).unwrap();
        let out = solve(&m, &SolvePolicy::default()).unwrap();
        assert_eq!(out.cut.cut_weight(), 0);
        assert_eq!(out.cut.signs(), &[1]);
        assert!(out.forest.edges().is_empty());
        assert!(out.trace.is_empty());
    }

    #[test]
    fn contract_step_subtractive_fold() {
        // Five vertices; picked edge (2,4) in 1-based terms with positive
        // weight folds row 4 into row 2 subtractively.
        let m = WeightMatrix::from_edges(
            5,
            &[(1, 3, 7), (0, 1, 2), (1, 2, 4), (0, 3, 5), (2, 3, 6), (3, 4, 1)],
        )
        .unwrap();
        let mut st = ContractionState::new(&m);
        let before: Vec<i64> = (0..5).map(|k| st.weight(1, k)).collect();
        let row4: Vec<i64> = (0..5).map(|k| st.weight(3, k)).collect();
        let (removed, survivor) =
            contract_step(&mut st, (1, 3), -1, SurvivorRule::SmallIndex).unwrap();
        assert_eq!((removed, survivor), (3, 1));
        for k in [0usize, 2, 4] {
            assert_eq!(st.weight(1, k), before[k] - row4[k]);
        }
        assert!(!st.is_active(3));
    }

    #[test]
    fn contract_step_triangle_survivor_large() {
        // Picked (2,3) with survivor 3: w13 becomes 2 + (-1) * 1 = 1.
        let mut st = ContractionState::new(&triangle());
        let (removed, survivor) =
            contract_step(&mut st, (1, 2), -1, SurvivorRule::LargeIndex).unwrap();
        assert_eq!((removed, survivor), (1, 2));
        assert_eq!(st.weight(0, 2), 1);
    }

    #[test]
    fn contract_step_errors() {
        let mut st = ContractionState::new(&triangle());
        contract_step(&mut st, (1, 2), -1, SurvivorRule::SmallIndex).unwrap();
        // Vertex 2 was removed.
        assert_eq!(
            contract_step(&mut st, (0, 2), -1, SurvivorRule::SmallIndex).unwrap_err(),
            SolveError::InactiveEndpoint { vertex: 2 }
        );
        let zero = WeightMatrix::<i64>::from_edges(2, &[]).unwrap();
        let mut st = ContractionState::new(&zero);
        assert_eq!(
            contract_step(&mut st, (0, 1), 1, SurvivorRule::SmallIndex).unwrap_err(),
            SolveError::ZeroPickWeight
        );
    }

    #[test]
    fn propagate_signs_worked_example() {
        // Forest (2,4,-1), (1,5,-1), (2,5,+1), (3,5,+1) on five vertices
        // partitions them into {1,4} versus {2,3,5}.
        let forest = StabilizerForest::new(
            5,
            vec![
                SignedForestEdge { i: 1, j: 3, sign: -1 },
                SignedForestEdge { i: 0, j: 4, sign: -1 },
                SignedForestEdge { i: 1, j: 4, sign: 1 },
                SignedForestEdge { i: 2, j: 4, sign: 1 },
            ],
        )
        .unwrap();
        let z = propagate_signs(&forest).unwrap();
        assert_eq!(z, vec![1, -1, -1, 1, -1]);
    }

    #[test]
    fn propagate_signs_trivial_cases() {
        let empty = StabilizerForest::new(3, vec![]).unwrap();
        assert_eq!(propagate_signs(&empty).unwrap(), vec![1, 1, 1]);
        let single =
            StabilizerForest::new(2, vec![SignedForestEdge { i: 0, j: 1, sign: -1 }]).unwrap();
        assert_eq!(propagate_signs(&single).unwrap(), vec![1, -1]);
    }

    #[test]
    fn propagate_signs_detects_cycles() {
        let cyclic = StabilizerForest {
            n: 3,
            edges: vec![
                SignedForestEdge { i: 0, j: 1, sign: 1 },
                SignedForestEdge { i: 1, j: 2, sign: 1 },
                SignedForestEdge { i: 0, j: 2, sign: -1 },
            ],
        };
        assert_eq!(propagate_signs(&cyclic).unwrap_err(), SolveError::CyclicForest);
    }

    #[test]
    fn forest_new_rejects_bad_edges() {
        assert!(StabilizerForest::new(3, vec![SignedForestEdge { i: 0, j: 0, sign: 1 }]).is_err());
        assert!(StabilizerForest::new(3, vec![SignedForestEdge { i: 0, j: 5, sign: 1 }]).is_err());
        assert!(StabilizerForest::new(3, vec![SignedForestEdge { i: 0, j: 1, sign: 2 }]).is_err());
    }

    #[test]
    fn engines_agree_on_the_triangle() {
        let m = triangle();
        for tie in [TieBreak::Lex, TieBreak::RevLex] {
            for survivor in [SurvivorRule::SmallIndex, SurvivorRule::LargeIndex] {
                let naive = solve(
                    &m,
                    &SolvePolicy { tie_break: tie, survivor, engine: Engine::Naive, epsilon: None },
                )
                .unwrap();
                let sorted = solve(
                    &m,
                    &SolvePolicy { tie_break: tie, survivor, engine: Engine::Sorted, epsilon: None },
                )
                .unwrap();
                assert_eq!(naive.cut.cut_weight(), sorted.cut.cut_weight());
                assert_eq!(naive.cut.signs(), sorted.cut.signs());
                assert_eq!(naive.forest.edges(), sorted.forest.edges());
            }
        }
    }

    #[test]
    fn real_mode_epsilon_stops_early() {
        // Tiny residual weights below the override threshold are not picked.
        let m = WeightMatrix::from_edges(3, &[(0, 1, 1.0), (0, 2, 1e-12)]).unwrap();
        let out = solve(
            &m,
            &SolvePolicy { epsilon: Some(1e-6), ..SolvePolicy::default() },
        )
        .unwrap();
        assert_eq!(out.trace.len(), 1);
        assert_eq!(out.forest.edges().len(), 1);
    }
}
