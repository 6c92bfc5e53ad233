//! C ABI for the maxcut solvers.
//!
//! Matrices and solutions are opaque handles created and destroyed through
//! this interface. Functions return [`McStatus`]; on failure,
//! [`mc_last_error_message`] yields a human-readable description valid until
//! the next failing call on the same thread.

use std::cell::RefCell;
use std::ffi::{CStr, CString};
use std::os::raw::c_char;
use std::path::Path;

use maxcut::baselines::{dec_solve, ec_solve, sg3_solve, sg_solve};
use maxcut::{
    mcut, oracle, stabilizer, tsplib, DecDirection, DynWeightMatrix, Engine, ParseError, SgOrder,
    SolveError, SolvePolicy, SurvivorRule, TieBreak, Weight, WeightMatrix,
};

/// Status code returned by every fallible function.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum McStatus {
    Ok = 0,
    /// A required pointer argument was null.
    NullPointer = 1,
    /// A string argument was not valid UTF-8.
    Utf8 = 2,
    /// The instance file could not be read.
    Io = 3,
    /// The instance file could not be parsed.
    Parse = 4,
    /// Invalid argument (bad indices, weights, sizes, or enum values).
    Invalid = 5,
    /// Exact solve refused: the instance exceeds the size limit.
    TooLarge = 6,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum McAlgorithm {
    Stabilizer = 0,
    Ec = 1,
    Dec = 2,
    Sg = 3,
    Sg3 = 4,
    Exact = 5,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum McTieBreak {
    Lex = 0,
    RevLex = 1,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum McSurvivor {
    SmallIndex = 0,
    LargeIndex = 1,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum McDecDirection {
    MaxTotal = 0,
    KeepSmaller = 1,
    KeepLarger = 2,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum McEngine {
    Naive = 0,
    Sorted = 1,
}

/// Solver knobs. Obtain defaults from [`mc_policy_default`] and override the
/// fields you care about. `epsilon < 0` keeps the per-matrix default.
#[repr(C)]
#[derive(Debug, Clone, Copy)]
pub struct McPolicy {
    pub tie_break: McTieBreak,
    pub survivor: McSurvivor,
    pub dec_direction: McDecDirection,
    pub engine: McEngine,
    pub epsilon: f64,
    pub oracle_max_n: u32,
}

/// Opaque instance handle.
pub struct McMatrix {
    inner: DynWeightMatrix,
}

/// Opaque solution handle.
pub struct McSolution {
    signs: Vec<i8>,
    cut_weight: f64,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(message: impl Into<String>) {
    let text = CString::new(message.into()).unwrap_or_default();
    LAST_ERROR.with(|slot| *slot.borrow_mut() = text);
}

fn parse_status(e: &ParseError) -> McStatus {
    match e {
        ParseError::Io { .. } => McStatus::Io,
        _ => McStatus::Parse,
    }
}

fn solve_status(e: &SolveError) -> McStatus {
    match e {
        SolveError::TooLarge { .. } => McStatus::TooLarge,
        _ => McStatus::Invalid,
    }
}

/// Message describing the most recent failure on this thread. The pointer
/// stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn mc_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ptr())
}

/// Policy with the documented default behavior.
#[no_mangle]
pub extern "C" fn mc_policy_default() -> McPolicy {
    McPolicy {
        tie_break: McTieBreak::Lex,
        survivor: McSurvivor::SmallIndex,
        dec_direction: McDecDirection::MaxTotal,
        engine: McEngine::Sorted,
        epsilon: -1.0,
        oracle_max_n: oracle::DEFAULT_MAX_N as u32,
    }
}

/// # Safety
/// `path` must point to a NUL-terminated string; `out` must be a valid
/// destination for one pointer.
unsafe fn load_file(
    path: *const c_char,
    out: *mut *mut McMatrix,
    parse: impl Fn(&Path) -> Result<DynWeightMatrix, ParseError>,
) -> McStatus {
    if path.is_null() || out.is_null() {
        set_error("null pointer argument");
        return McStatus::NullPointer;
    }
    let path = match CStr::from_ptr(path).to_str() {
        Ok(s) => s,
        Err(_) => {
            set_error("path is not valid UTF-8");
            return McStatus::Utf8;
        }
    };
    match parse(Path::new(path)) {
        Ok(inner) => {
            *out = Box::into_raw(Box::new(McMatrix { inner }));
            McStatus::Ok
        }
        Err(e) => {
            set_error(e.to_string());
            *out = std::ptr::null_mut();
            parse_status(&e)
        }
    }
}

/// Load a TSPLIB `.tsp` instance.
///
/// # Safety
/// `path` must point to a NUL-terminated string and `out` to writable
/// pointer storage. On success the caller owns the handle and must release
/// it with [`mc_matrix_free`].
#[no_mangle]
pub unsafe extern "C" fn mc_matrix_from_tsplib_file(
    path: *const c_char,
    out: *mut *mut McMatrix,
) -> McStatus {
    load_file(path, out, |p| {
        let inst = tsplib::parse_tsplib_file(p)?;
        Ok(DynWeightMatrix::Int(inst.to_weight_matrix()?))
    })
}

/// Load an MCUT instance.
///
/// # Safety
/// Same contract as [`mc_matrix_from_tsplib_file`].
#[no_mangle]
pub unsafe extern "C" fn mc_matrix_from_mcut_file(
    path: *const c_char,
    out: *mut *mut McMatrix,
) -> McStatus {
    load_file(path, out, mcut::parse_mcut_file)
}

/// Build a matrix from `edge_count` edges given as parallel arrays of
/// 0-based endpoints (`i < j`) and weights. Unlisted pairs have weight 0;
/// the matrix is integer-exact iff every weight is integral.
///
/// # Safety
/// The three arrays must hold `edge_count` readable elements each and `out`
/// must be writable. The returned handle is owned by the caller.
#[no_mangle]
pub unsafe extern "C" fn mc_matrix_from_edges(
    vertex_count: usize,
    edge_i: *const u32,
    edge_j: *const u32,
    weights: *const f64,
    edge_count: usize,
    out: *mut *mut McMatrix,
) -> McStatus {
    if out.is_null() || (edge_count > 0 && (edge_i.is_null() || edge_j.is_null() || weights.is_null()))
    {
        set_error("null pointer argument");
        return McStatus::NullPointer;
    }
    let is = std::slice::from_raw_parts(edge_i, edge_count);
    let js = std::slice::from_raw_parts(edge_j, edge_count);
    let ws = std::slice::from_raw_parts(weights, edge_count);
    let integral = ws.iter().all(|w| w.fract() == 0.0 && w.abs() <= 2f64.powi(53));
    let built = if integral {
        let edges: Vec<(usize, usize, i64)> = is
            .iter()
            .zip(js)
            .zip(ws)
            .map(|((&i, &j), &w)| (i as usize, j as usize, w as i64))
            .collect();
        WeightMatrix::from_edges(vertex_count, &edges).map(DynWeightMatrix::Int)
    } else {
        let edges: Vec<(usize, usize, f64)> = is
            .iter()
            .zip(js)
            .zip(ws)
            .map(|((&i, &j), &w)| (i as usize, j as usize, w))
            .collect();
        WeightMatrix::from_edges(vertex_count, &edges).map(DynWeightMatrix::Real)
    };
    match built {
        Ok(inner) => {
            *out = Box::into_raw(Box::new(McMatrix { inner }));
            McStatus::Ok
        }
        Err(e) => {
            set_error(e.to_string());
            *out = std::ptr::null_mut();
            McStatus::Invalid
        }
    }
}

/// Number of vertices, or 0 for a null handle.
///
/// # Safety
/// `matrix` must be a live handle from this interface or null.
#[no_mangle]
pub unsafe extern "C" fn mc_matrix_vertex_count(matrix: *const McMatrix) -> usize {
    matrix.as_ref().map(|m| m.inner.n()).unwrap_or(0)
}

/// Sum of all edge weights (exact integers are widened to double).
///
/// # Safety
/// `matrix` must be a live handle from this interface or null.
#[no_mangle]
pub unsafe extern "C" fn mc_matrix_total_weight(matrix: *const McMatrix) -> f64 {
    matrix.as_ref().map(|m| m.inner.total_weight_f64()).unwrap_or(f64::NAN)
}

/// True when the matrix is in integer-exact mode.
///
/// # Safety
/// `matrix` must be a live handle from this interface or null.
#[no_mangle]
pub unsafe extern "C" fn mc_matrix_is_integer(matrix: *const McMatrix) -> bool {
    matrix.as_ref().map(|m| m.inner.is_integer()).unwrap_or(false)
}

/// Release a matrix handle. Null is a no-op.
///
/// # Safety
/// `matrix` must have been returned by this interface and not freed before.
#[no_mangle]
pub unsafe extern "C" fn mc_matrix_free(matrix: *mut McMatrix) {
    if !matrix.is_null() {
        drop(Box::from_raw(matrix));
    }
}

fn run_solver<W: Weight>(
    matrix: &WeightMatrix<W>,
    algorithm: McAlgorithm,
    policy: &McPolicy,
) -> Result<(Vec<i8>, f64), SolveError> {
    let stab_policy = SolvePolicy {
        tie_break: match policy.tie_break {
            McTieBreak::Lex => TieBreak::Lex,
            McTieBreak::RevLex => TieBreak::RevLex,
        },
        survivor: match policy.survivor {
            McSurvivor::SmallIndex => SurvivorRule::SmallIndex,
            McSurvivor::LargeIndex => SurvivorRule::LargeIndex,
        },
        engine: match policy.engine {
            McEngine::Naive => Engine::Naive,
            McEngine::Sorted => Engine::Sorted,
        },
        epsilon: (policy.epsilon >= 0.0).then_some(policy.epsilon),
    };
    let cut = match algorithm {
        McAlgorithm::Stabilizer => stabilizer::solve(matrix, &stab_policy)?.cut,
        McAlgorithm::Ec => ec_solve(matrix)?.cut,
        McAlgorithm::Dec => {
            let direction = match policy.dec_direction {
                McDecDirection::MaxTotal => DecDirection::MaxTotal,
                McDecDirection::KeepSmaller => DecDirection::KeepSmaller,
                McDecDirection::KeepLarger => DecDirection::KeepLarger,
            };
            dec_solve(matrix, direction).cut
        }
        McAlgorithm::Sg => sg_solve(matrix, &SgOrder::Natural)?,
        McAlgorithm::Sg3 => sg3_solve(matrix),
        McAlgorithm::Exact => {
            oracle::brute_force(matrix, policy.oracle_max_n as usize)?.witness
        }
    };
    let weight = cut.cut_weight().to_f64();
    Ok((cut.signs().to_vec(), weight))
}

/// Solve `matrix` with `algorithm`. `policy` may be null for defaults. On
/// success `*out` holds a solution handle owned by the caller.
///
/// # Safety
/// `matrix` must be a live handle; `policy` must be null or point to a valid
/// [`McPolicy`]; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn mc_solve(
    matrix: *const McMatrix,
    algorithm: McAlgorithm,
    policy: *const McPolicy,
    out: *mut *mut McSolution,
) -> McStatus {
    if matrix.is_null() || out.is_null() {
        set_error("null pointer argument");
        return McStatus::NullPointer;
    }
    let policy = if policy.is_null() { mc_policy_default() } else { *policy };
    let result = match &(*matrix).inner {
        DynWeightMatrix::Int(m) => run_solver(m, algorithm, &policy),
        DynWeightMatrix::Real(m) => run_solver(m, algorithm, &policy),
    };
    match result {
        Ok((signs, cut_weight)) => {
            *out = Box::into_raw(Box::new(McSolution { signs, cut_weight }));
            McStatus::Ok
        }
        Err(e) => {
            set_error(e.to_string());
            *out = std::ptr::null_mut();
            solve_status(&e)
        }
    }
}

/// Cut weight of a solution (NaN for a null handle).
///
/// # Safety
/// `solution` must be a live handle from this interface or null.
#[no_mangle]
pub unsafe extern "C" fn mc_solution_cut_weight(solution: *const McSolution) -> f64 {
    solution.as_ref().map(|s| s.cut_weight).unwrap_or(f64::NAN)
}

/// Number of vertex labels in a solution.
///
/// # Safety
/// `solution` must be a live handle from this interface or null.
#[no_mangle]
pub unsafe extern "C" fn mc_solution_vertex_count(solution: *const McSolution) -> usize {
    solution.as_ref().map(|s| s.signs.len()).unwrap_or(0)
}

/// Copy the +-1 vertex labels into `buffer`, which must hold at least
/// `length >= mc_solution_vertex_count()` bytes.
///
/// # Safety
/// `solution` must be a live handle; `buffer` must be writable for `length`
/// bytes.
#[no_mangle]
pub unsafe extern "C" fn mc_solution_signs(
    solution: *const McSolution,
    buffer: *mut i8,
    length: usize,
) -> McStatus {
    let Some(sol) = solution.as_ref() else {
        set_error("null solution handle");
        return McStatus::NullPointer;
    };
    if buffer.is_null() {
        set_error("null buffer");
        return McStatus::NullPointer;
    }
    if length < sol.signs.len() {
        set_error(format!("buffer holds {length} entries, need {}", sol.signs.len()));
        return McStatus::Invalid;
    }
    std::ptr::copy_nonoverlapping(sol.signs.as_ptr(), buffer, sol.signs.len());
    McStatus::Ok
}

/// Release a solution handle. Null is a no-op.
///
/// # Safety
/// `solution` must have been returned by this interface and not freed before.
#[no_mangle]
pub unsafe extern "C" fn mc_solution_free(solution: *mut McSolution) {
    if !solution.is_null() {
        drop(Box::from_raw(solution));
    }
}
