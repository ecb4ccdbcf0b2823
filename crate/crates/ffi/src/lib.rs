//! C interface to the `smbd` solver.
//!
//! Graphs are opaque handles created by `smbd_graph_from_*` and released
//! with `smbd_graph_free`. Every fallible call returns an `SmbdStatus`; on
//! failure `smbd_last_error` describes what went wrong on the calling
//! thread. Values use `SMBD_INFINITY` for an infinite game value.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use smbd::count::ExtendedCount;
use smbd::families::gamma_prime_via_structure;
use smbd::formula::{
    all_even3_value, all_even_upper_bound, caterpillar_values, path_value, recognize_caterpillar,
    star_value_sgame, z_family, AllEvenTag, StarProfile, StarValue,
};
use smbd::graph::{parse_edge_list, parse_graph6, to_graph6};
use smbd::{Error, Game, Graph, Solver, SolverConfig};

/// Encodes an infinite game value.
pub const SMBD_INFINITY: u32 = u32::MAX;

/// Game selector: Dominator starts.
pub const SMBD_GAME_D: u32 = 0;
/// Game selector: Staller starts.
pub const SMBD_GAME_S: u32 = 1;

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SmbdStatus {
    Ok = 0,
    NullPointer = 1,
    Parse = 2,
    CapExceeded = 3,
    NotATree = 4,
    Invalid = 5,
    Utf8 = 6,
    Panic = 7,
}

/// Opaque graph handle.
pub struct SmbdGraph(Graph);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(CString::new(msg).unwrap()));
}

fn fail(e: Error) -> SmbdStatus {
    let status = match e {
        Error::Parse { .. } | Error::Graph6(_) => SmbdStatus::Parse,
        Error::CapExceeded { .. } => SmbdStatus::CapExceeded,
        Error::NotATree | Error::NotAForest => SmbdStatus::NotATree,
        Error::Invalid(_) => SmbdStatus::Invalid,
    };
    set_error(e.to_string());
    status
}

fn guard(f: impl FnOnce() -> Result<(), SmbdStatus>) -> SmbdStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => SmbdStatus::Ok,
        Ok(Err(s)) => s,
        Err(_) => {
            set_error("internal panic");
            SmbdStatus::Panic
        }
    }
}

fn null() -> SmbdStatus {
    set_error("null pointer argument");
    SmbdStatus::NullPointer
}

fn encode(v: ExtendedCount) -> u32 {
    v.finite().unwrap_or(SMBD_INFINITY)
}

unsafe fn text<'a>(s: *const c_char) -> Result<&'a str, SmbdStatus> {
    if s.is_null() {
        return Err(null());
    }
    CStr::from_ptr(s).to_str().map_err(|_| {
        set_error("input is not UTF-8");
        SmbdStatus::Utf8
    })
}

unsafe fn out<'a, T>(p: *mut T) -> Result<&'a mut T, SmbdStatus> {
    p.as_mut().ok_or_else(null)
}

unsafe fn graph<'a>(g: *const SmbdGraph) -> Result<&'a Graph, SmbdStatus> {
    g.as_ref().map(|g| &g.0).ok_or_else(null)
}

fn game(sel: u32) -> Result<Game, SmbdStatus> {
    match sel {
        SMBD_GAME_D => Ok(Game::D),
        SMBD_GAME_S => Ok(Game::S),
        _ => Err(fail(Error::Invalid(format!("unknown game selector {sel}")))),
    }
}

/// Message of the last failed call on this thread, or NULL. The pointer
/// stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn smbd_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Parses a graph6 string into a new handle.
///
/// # Safety
/// `s` must be a NUL-terminated string and the output pointer valid.
#[no_mangle]
pub unsafe extern "C" fn smbd_graph_from_graph6(
    s: *const c_char,
    out_graph: *mut *mut SmbdGraph,
) -> SmbdStatus {
    guard(|| {
        let slot = out(out_graph)?;
        let g = parse_graph6(text(s)?.trim()).map_err(fail)?;
        *slot = Box::into_raw(Box::new(SmbdGraph(g)));
        Ok(())
    })
}

/// Parses an edge list (`n <count>` header, one `u v` pair per line).
///
/// # Safety
/// `s` must be a NUL-terminated string and the output pointer valid.
#[no_mangle]
pub unsafe extern "C" fn smbd_graph_from_edge_list(
    s: *const c_char,
    out_graph: *mut *mut SmbdGraph,
) -> SmbdStatus {
    guard(|| {
        let slot = out(out_graph)?;
        let g = parse_edge_list(text(s)?).map_err(fail)?;
        *slot = Box::into_raw(Box::new(SmbdGraph(g)));
        Ok(())
    })
}

/// Releases a handle; NULL is ignored.
///
/// # Safety
/// `g` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn smbd_graph_free(g: *mut SmbdGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Number of vertices, 0 for NULL.
///
/// # Safety
/// `g` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn smbd_graph_vertex_count(g: *const SmbdGraph) -> u32 {
    g.as_ref().map_or(0, |g| g.0.vertex_count() as u32)
}

/// graph6 encoding; release with `smbd_string_free`.
///
/// # Safety
/// `g` must be a live handle and the output pointer valid.
#[no_mangle]
pub unsafe extern "C" fn smbd_graph_to_graph6(
    g: *const SmbdGraph,
    out_str: *mut *mut c_char,
) -> SmbdStatus {
    guard(|| {
        let slot = out(out_str)?;
        *slot = CString::new(to_graph6(graph(g)?)).unwrap().into_raw();
        Ok(())
    })
}

/// # Safety
/// `s` must be NULL or a string returned by this library.
#[no_mangle]
pub unsafe extern "C" fn smbd_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

unsafe fn solve(g: *const SmbdGraph, cap: u32, game: Game, value: *mut u32) -> SmbdStatus {
    guard(|| {
        let slot = out(value)?;
        let g = graph(g)?;
        let mut solver = Solver::new(SolverConfig::default().with_cap(cap as usize));
        let v = match game {
            Game::D => solver.gamma_smb(g),
            Game::S => solver.gamma_smb_prime(g),
        }
        .map_err(fail)?;
        *slot = encode(v);
        Ok(())
    })
}

/// `γ_SMB` by exact search; `cap` bounds the vertex count.
///
/// # Safety
/// `g` must be a live handle and `value` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn smbd_gamma_smb(
    g: *const SmbdGraph,
    cap: u32,
    value: *mut u32,
) -> SmbdStatus {
    solve(g, cap, Game::D, value)
}

/// `γ'_SMB` by exact search; `cap` bounds the vertex count.
///
/// # Safety
/// `g` must be a live handle and `value` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn smbd_gamma_smb_prime(
    g: *const SmbdGraph,
    cap: u32,
    value: *mut u32,
) -> SmbdStatus {
    solve(g, cap, Game::S, value)
}

/// `γ'_SMB` of a tree from its minimum-rank substructure.
///
/// # Safety
/// `g` must be a live handle and `value` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn smbd_gamma_prime_via_structure(
    g: *const SmbdGraph,
    value: *mut u32,
) -> SmbdStatus {
    guard(|| {
        let slot = out(value)?;
        *slot = encode(gamma_prime_via_structure(graph(g)?).map_err(fail)?);
        Ok(())
    })
}

/// Value of `P_n` in the given game.
///
/// # Safety
/// `value` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn smbd_path_value(n: u32, game_sel: u32, value: *mut u32) -> SmbdStatus {
    guard(|| {
        let slot = out(value)?;
        *slot = encode(path_value(n as usize, game(game_sel)?).map_err(fail)?);
        Ok(())
    })
}

/// S-game value of `S(n_1, ..., n_l)`. When the value is open, `is_open`
/// is set to 1 and `lower`/`upper` hold the bounds; otherwise `is_open` is
/// 0 and `value` holds it.
///
/// # Safety
/// `branches` must point to `len` values; the outputs must be valid.
#[no_mangle]
pub unsafe extern "C" fn smbd_star_value(
    branches: *const u32,
    len: usize,
    value: *mut u32,
    is_open: *mut u32,
    lower: *mut u32,
    upper: *mut u32,
) -> SmbdStatus {
    guard(|| {
        if branches.is_null() {
            return Err(null());
        }
        let (value, is_open, lower, upper) = (out(value)?, out(is_open)?, out(lower)?, out(upper)?);
        let b: Vec<usize> = std::slice::from_raw_parts(branches, len)
            .iter()
            .map(|&x| x as usize)
            .collect();
        let profile = StarProfile::new(b).map_err(fail)?;
        match star_value_sgame(&profile).map_err(fail)? {
            StarValue::Exact { value: v } => {
                *value = encode(v);
                *is_open = 0;
            }
            StarValue::Open {
                lower: lo,
                upper: hi,
            } => {
                *value = SMBD_INFINITY;
                *is_open = 1;
                *lower = lo;
                *upper = hi;
            }
        }
        Ok(())
    })
}

/// Value of the all-even star `S(n_1, n_2, n_3)`; `t1` is set to 1 for
/// the larger value class.
///
/// # Safety
/// The outputs must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn smbd_all_even3_value(
    n1: u32,
    n2: u32,
    n3: u32,
    value: *mut u32,
    t1: *mut u32,
) -> SmbdStatus {
    guard(|| {
        let (value, t1) = (out(value)?, out(t1)?);
        let (v, class) = all_even3_value(n1 as usize, n2 as usize, n3 as usize).map_err(fail)?;
        *value = encode(v);
        *t1 = u32::from(class.tag == AllEvenTag::T1);
        Ok(())
    })
}

/// Upper bound for an all-even star with at least three branches.
///
/// # Safety
/// `branches` must point to `len` values and `value` be valid.
#[no_mangle]
pub unsafe extern "C" fn smbd_all_even_upper_bound(
    branches: *const u32,
    len: usize,
    value: *mut u32,
) -> SmbdStatus {
    guard(|| {
        if branches.is_null() {
            return Err(null());
        }
        let slot = out(value)?;
        let b: Vec<usize> = std::slice::from_raw_parts(branches, len)
            .iter()
            .map(|&x| x as usize)
            .collect();
        *slot = all_even_upper_bound(&b).map_err(fail)?;
        Ok(())
    })
}

/// Both values of a caterpillar from its clean odd paths.
///
/// # Safety
/// `g` must be a live handle and the outputs valid.
#[no_mangle]
pub unsafe extern "C" fn smbd_caterpillar_values(
    g: *const SmbdGraph,
    gamma_smb: *mut u32,
    gamma_smb_prime: *mut u32,
) -> SmbdStatus {
    guard(|| {
        let (d, s) = (out(gamma_smb)?, out(gamma_smb_prime)?);
        let profile = recognize_caterpillar(graph(g)?)
            .ok_or_else(|| fail(Error::Invalid("graph is not a caterpillar".into())))?;
        let (vd, vs) = caterpillar_values(&profile);
        *d = encode(vd);
        *s = encode(vs);
        Ok(())
    })
}

/// Builds `Z(l, p)` into a new handle and reports its value.
///
/// # Safety
/// The outputs must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn smbd_z_family(
    l: u32,
    p: u32,
    out_graph: *mut *mut SmbdGraph,
    expected: *mut u32,
) -> SmbdStatus {
    guard(|| {
        let (slot, expected) = (out(out_graph)?, out(expected)?);
        let (g, v) = z_family(l, p).map_err(fail)?;
        *slot = Box::into_raw(Box::new(SmbdGraph(g)));
        *expected = v;
        Ok(())
    })
}
