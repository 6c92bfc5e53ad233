//! Mutable working state shared by the contraction-based solvers, plus the
//! audit trace they all emit.

use std::fmt;

use crate::graph::{Weight, WeightMatrix};

/// One contraction step: the picked edge, its weight at pick time, the fold
/// coefficient, and which endpoint survived.
#[derive(Debug, Clone, PartialEq)]
pub struct TraceStep<W: Weight> {
    /// Picked edge as active row indices, `i < j` (0-based).
    pub i: usize,
    pub j: usize,
    /// Weight of the picked edge at the moment it was selected.
    pub weight: W,
    /// Fold coefficient: +1 merges same-side (additive), -1 opposite (differencing).
    pub sign: i8,
    pub removed: usize,
    pub survivor: usize,
}

/// Ordered record of the contraction steps of one solver run.
#[derive(Debug, Clone, PartialEq)]
pub struct ContractionTrace<W: Weight> {
    steps: Vec<TraceStep<W>>,
}

impl<W: Weight> Default for ContractionTrace<W> {
    fn default() -> Self {
        ContractionTrace { steps: Vec::new() }
    }
}

impl<W: Weight> ContractionTrace<W> {
    pub(crate) fn push(&mut self, step: TraceStep<W>) {
        self.steps.push(step);
    }

    pub fn steps(&self) -> &[TraceStep<W>] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Text export, one step per line:
    /// `step# i j weightAtPick sign removed survivor` with 1-based vertices.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for (k, s) in self.steps.iter().enumerate() {
            out.push_str(&format!(
                "{} {} {} {} {:+} {} {}\n",
                k + 1,
                s.i + 1,
                s.j + 1,
                s.weight,
                s.sign,
                s.removed + 1,
                s.survivor + 1,
            ));
        }
        out
    }
}

impl<W: Weight> fmt::Display for ContractionTrace<W> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// Which endpoint of a picked edge keeps its row when the other is folded in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SurvivorRule {
    /// The smaller row index survives; the larger is removed.
    #[default]
    SmallIndex,
    /// The larger row index survives.
    LargeIndex,
}

/// Private mutable copy of a weight matrix on which contraction solvers run.
///
/// Rows of removed vertices stay allocated but inactive. Each active row
/// represents the class of original vertices merged into it; `class_id`
/// tracks the minimum original member of that class. Edge-pick tie-breaks
/// compare class ids rather than raw row indices, which makes the pick
/// sequence independent of the survivor rule.
#[derive(Debug, Clone)]
pub struct ContractionState<W: Weight> {
    n: usize,
    w: Vec<W>,
    alive: Vec<bool>,
    class_id: Vec<u32>,
    epsilon: W,
    active_count: usize,
}

impl<W: Weight> ContractionState<W> {
    pub fn new(matrix: &WeightMatrix<W>) -> Self {
        ContractionState {
            n: matrix.n(),
            w: matrix.raw().to_vec(),
            alive: vec![true; matrix.n()],
            class_id: (0..matrix.n() as u32).collect(),
            epsilon: matrix.epsilon(),
            active_count: matrix.n(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn weight(&self, i: usize, j: usize) -> W {
        self.w[i * self.n + j]
    }

    pub fn is_active(&self, v: usize) -> bool {
        self.alive[v]
    }

    pub fn active_count(&self) -> usize {
        self.active_count
    }

    pub fn active_vertices(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(|&v| self.alive[v])
    }

    pub fn epsilon(&self) -> W {
        self.epsilon
    }

    pub(crate) fn set_epsilon(&mut self, epsilon: W) {
        self.epsilon = epsilon;
    }

    /// Minimum original vertex merged into the class represented by row `v`.
    pub fn class_id(&self, v: usize) -> u32 {
        self.class_id[v]
    }

    /// Canonical `(min, max)` class-id pair of an active edge, the tie-break key.
    pub fn canonical_pair(&self, i: usize, j: usize) -> (u32, u32) {
        let (a, b) = (self.class_id[i], self.class_id[j]);
        if a < b {
            (a, b)
        } else {
            (b, a)
        }
    }

    /// Pick survivor and removed endpoints of `(i, j)` under `rule`.
    pub fn split_pair(&self, i: usize, j: usize, rule: SurvivorRule) -> (usize, usize) {
        let (lo, hi) = if i < j { (i, j) } else { (j, i) };
        match rule {
            SurvivorRule::SmallIndex => (lo, hi),
            SurvivorRule::LargeIndex => (hi, lo),
        }
    }

    /// Fold the removed row into the survivor with coefficient `sign`
    /// (`w[s][k] += sign * w[r][k]` for every other active `k`), then
    /// deactivate the removed row. Returns nothing; callers record the trace.
    pub(crate) fn fold_into(&mut self, survivor: usize, removed: usize, sign: i8) {
        debug_assert!(self.alive[survivor] && self.alive[removed] && survivor != removed);
        for k in 0..self.n {
            if k == survivor || k == removed || !self.alive[k] {
                continue;
            }
            let delta = self.w[removed * self.n + k].signed(sign);
            self.w[survivor * self.n + k] += delta;
            self.w[k * self.n + survivor] = self.w[survivor * self.n + k];
        }
        self.alive[removed] = false;
        self.active_count -= 1;
        self.class_id[survivor] = self.class_id[survivor].min(self.class_id[removed]);
    }

    /// Sum of the active row `v`, excluding `excl` (and `v` itself).
    pub fn row_sum_excluding(&self, v: usize, excl: usize) -> W {
        let mut sum = W::ZERO;
        for k in 0..self.n {
            if k != v && k != excl && self.alive[k] {
                sum += self.w[v * self.n + k];
            }
        }
        sum
    }

    /// Scan all active edges, keeping the best under `better`. The closure
    /// sees `(candidate weight, candidate key, best weight, best key)` and
    /// returns true when the candidate should replace the best.
    pub(crate) fn scan_edges<F>(&self, better: F) -> Option<(usize, usize, W)>
    where
        F: Fn(W, (u32, u32), W, (u32, u32)) -> bool,
    {
        let mut best: Option<(usize, usize, W, (u32, u32))> = None;
        for i in 0..self.n {
            if !self.alive[i] {
                continue;
            }
            for j in (i + 1)..self.n {
                if !self.alive[j] {
                    continue;
                }
                let w = self.w[i * self.n + j];
                let key = self.canonical_pair(i, j);
                match best {
                    None => best = Some((i, j, w, key)),
                    Some((_, _, bw, bkey)) => {
                        if better(w, key, bw, bkey) {
                            best = Some((i, j, w, key));
                        }
                    }
                }
            }
        }
        best.map(|(i, j, w, _)| (i, j, w))
    }
}
