//! C ABI over casimirlab.
//!
//! Algebras and decompositions are opaque handles created and destroyed by this
//! library. Exact values cross the boundary as NUL-terminated strings ("24",
//! "-5/12") owned by the library and released with `cl_string_free`. Every
//! fallible call returns a `ClStatus`; on failure `cl_last_error` describes the
//! cause for the calling thread.

#![allow(clippy::missing_safety_doc)]

use casimirlab::casimir::{AlgebraId, Family};
use casimirlab::cli::report::{Format, Status};
use casimirlab::cli::suites::{self, Suite, SuiteOptions};
use casimirlab::decomp::{self, Decomposition};
use casimirlab::error::Error;
use casimirlab::exact::to_short_string;
use casimirlab::fixtures::FixtureStore;
use casimirlab::label::{self, IrrepLabel};
use casimirlab::vogel;
use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

/// Result codes of every fallible function.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClStatus {
    Ok = 0,
    /// A required pointer argument was null.
    NullPointer = 1,
    /// A string argument was not UTF-8 or did not parse.
    InvalidArgument = 2,
    InvalidAlgebra = 3,
    InvalidLabel = 4,
    /// An index or level outside the admissible range.
    OutOfRange = 5,
    /// The operation does not exist for this algebra (e.g. □⊗Y_n for e8).
    Unsupported = 6,
    /// Coinciding eigenvalues make the requested construction singular.
    Degenerate = 7,
    /// Any other library error (vanishing denominators, fixture problems, …).
    Failed = 8,
    /// A verification suite ran and at least one check failed.
    VerifyFailed = 9,
    /// A panic was caught at the boundary.
    Internal = 10,
}

impl From<&Error> for ClStatus {
    fn from(e: &Error) -> Self {
        match e {
            Error::InvalidAlgebra(_) | Error::InsufficientN { .. } => ClStatus::InvalidAlgebra,
            Error::InvalidLabel(_) | Error::InvalidPartition(_) | Error::NotDominant(_) => ClStatus::InvalidLabel,
            Error::Parse { .. } => ClStatus::InvalidArgument,
            Error::OutOfRange(_) | Error::InsufficientSamples { .. } => ClStatus::OutOfRange,
            Error::Unsupported(_) => ClStatus::Unsupported,
            Error::Degenerate(_) => ClStatus::Degenerate,
            _ => ClStatus::Failed,
        }
    }
}

/// A simple Lie algebra (opaque).
pub struct ClAlgebra(AlgebraId);

/// A tensor-product decomposition: labels with multiplicities (opaque).
pub struct ClDecomposition(Vec<(CString, u64)>);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: impl Into<String>) {
    let msg = CString::new(msg.into().replace('\0', " ")).expect("NULs removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = msg);
}

/// Failure carried to the boundary: a status code and its message.
struct Fail(ClStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail(ClStatus::from(&e), e.to_string())
    }
}

type Outcome = Result<(), Fail>;

/// Runs `f`, translating errors and panics into a status and the thread's last error.
fn guard(f: impl FnOnce() -> Outcome) -> ClStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_error("");
            ClStatus::Ok
        }
        Ok(Err(Fail(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal error: panic caught at the C boundary");
            ClStatus::Internal
        }
    }
}

unsafe fn text<'a>(p: *const c_char, what: &str) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(Fail(ClStatus::NullPointer, format!("{what} is null")));
    }
    CStr::from_ptr(p).to_str().map_err(|_| Fail(ClStatus::InvalidArgument, format!("{what} is not UTF-8")))
}

unsafe fn algebra<'a>(p: *const ClAlgebra) -> Result<&'a AlgebraId, Fail> {
    p.as_ref().map(|a| &a.0).ok_or_else(|| Fail(ClStatus::NullPointer, "algebra handle is null".into()))
}

unsafe fn write_out<T>(out: *mut T, value: T) -> Outcome {
    if out.is_null() {
        return Err(Fail(ClStatus::NullPointer, "output pointer is null".into()));
    }
    out.write(value);
    Ok(())
}

fn owned(s: String) -> *mut c_char {
    CString::new(s.replace('\0', " ")).expect("NULs removed").into_raw()
}

fn check_out<T>(out: *mut T) -> Outcome {
    if out.is_null() {
        return Err(Fail(ClStatus::NullPointer, "output pointer is null".into()));
    }
    Ok(())
}

/// Message for the last failed call on this thread ("" after a success). The
/// pointer stays valid until the next call into this library on the same thread.
#[no_mangle]
pub extern "C" fn cl_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Library version as a static string.
#[no_mangle]
pub extern "C" fn cl_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Releases a string returned by this library. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn cl_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Creates an algebra from a family name ("sl", "so", "sp", "g2", "f4", "e6",
/// "e7", "e8") and N (ignored for the exceptional algebras).
#[no_mangle]
pub unsafe extern "C" fn cl_algebra_new(family: *const c_char, n: u32, out: *mut *mut ClAlgebra) -> ClStatus {
    guard(|| {
        check_out(out)?;
        let name = text(family, "family")?;
        let f: Family = name.parse().map_err(|e: Error| Fail(ClStatus::InvalidAlgebra, e.to_string()))?;
        let g = AlgebraId::new(f, f.is_classical().then_some(n))?;
        write_out(out, Box::into_raw(Box::new(ClAlgebra(g))))
    })
}

/// Destroys an algebra handle. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn cl_algebra_free(g: *mut ClAlgebra) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Display name of the algebra, e.g. "sl(4)".
#[no_mangle]
pub unsafe extern "C" fn cl_algebra_name(g: *const ClAlgebra, out: *mut *mut c_char) -> ClStatus {
    guard(|| {
        check_out(out)?;
        let g = algebra(g)?;
        write_out(out, owned(g.to_string()))
    })
}

/// Dimension of the irrep with the given label ("([1],[1])", "[2,1]", "1*w7").
#[no_mangle]
pub unsafe extern "C" fn cl_dim(g: *const ClAlgebra, label: *const c_char, out: *mut *mut c_char) -> ClStatus {
    guard(|| {
        check_out(out)?;
        let g = algebra(g)?;
        let l = label::parse_for(g, text(label, "label")?)?;
        write_out(out, owned(to_short_string(&label::dim(g, &l)?)))
    })
}

/// Quadratic Casimir of an irrep: raw (Cartan–Killing) and normalized so that ad has 1.
/// Either output may be null when not wanted.
#[no_mangle]
pub unsafe extern "C" fn cl_casimir(
    g: *const ClAlgebra,
    label: *const c_char,
    raw: *mut *mut c_char,
    normalized: *mut *mut c_char,
) -> ClStatus {
    guard(|| {
        let g = algebra(g)?;
        let l = label::parse_for(g, text(label, "label")?)?;
        let c = label::casimir(g, &l)?;
        if !raw.is_null() {
            raw.write(owned(to_short_string(&c.raw)));
        }
        if !normalized.is_null() {
            normalized.write(owned(to_short_string(&c.normalized)));
        }
        Ok(())
    })
}

/// Dimension of the Cartan power Y_n from the universal formula.
#[no_mangle]
pub unsafe extern "C" fn cl_dim_yn(g: *const ClAlgebra, n: u32, out: *mut *mut c_char) -> ClStatus {
    guard(|| {
        check_out(out)?;
        let g = algebra(g)?;
        let d = vogel::dim_yk_universal(&vogel::params(g, false), n as usize)?;
        write_out(out, owned(to_short_string(&d)))
    })
}

/// The L-rung ladder colour factor (multiplying the identity on □).
#[no_mangle]
pub unsafe extern "C" fn cl_ladder(g: *const ClAlgebra, rungs: u32, out: *mut *mut c_char) -> ClStatus {
    guard(|| {
        check_out(out)?;
        let g = algebra(g)?;
        write_out(out, owned(to_short_string(&vogel::ladder_factor(g, rungs)?)))
    })
}

/// □⊗Y_n (or □⊗Y_n′ when `primed`) as a decomposition handle.
#[no_mangle]
pub unsafe extern "C" fn cl_branch_box_yn(
    g: *const ClAlgebra,
    n: u32,
    primed: bool,
    out: *mut *mut ClDecomposition,
) -> ClStatus {
    guard(|| {
        check_out(out)?;
        let g = algebra(g)?;
        let d = decomp::branch_box_yn(g, n as usize, primed, &FixtureStore::resolve(None))?;
        write_out(out, Box::into_raw(Box::new(to_handle(&d))))
    })
}

/// sl(N) ad^⊗k as a decomposition handle over composite labels.
#[no_mangle]
pub unsafe extern "C" fn cl_ad_power(k: u32, out: *mut *mut ClDecomposition) -> ClStatus {
    guard(|| {
        check_out(out)?;
        write_out(out, Box::into_raw(Box::new(to_handle(&decomp::ad_power(k as usize)?))))
    })
}

fn to_handle(d: &Decomposition) -> ClDecomposition {
    ClDecomposition(d.iter().map(|(l, m): (&IrrepLabel, u64)| (CString::new(l.to_string()).expect("labels have no NUL"), m)).collect())
}

/// Number of distinct labels in a decomposition (0 for null).
#[no_mangle]
pub unsafe extern "C" fn cl_decomposition_len(d: *const ClDecomposition) -> usize {
    d.as_ref().map_or(0, |d| d.0.len())
}

/// Term `i`: its label (borrowed, valid while the handle lives) and multiplicity.
#[no_mangle]
pub unsafe extern "C" fn cl_decomposition_term(
    d: *const ClDecomposition,
    i: usize,
    label: *mut *const c_char,
    multiplicity: *mut u64,
) -> ClStatus {
    guard(|| {
        check_out(label)?;
        check_out(multiplicity)?;
        let d = d.as_ref().ok_or_else(|| Fail(ClStatus::NullPointer, "decomposition handle is null".into()))?;
        let (l, m) = d
            .0
            .get(i)
            .ok_or_else(|| Fail(ClStatus::OutOfRange, format!("term {i} of {}", d.0.len())))?;
        label.write(l.as_ptr());
        multiplicity.write(*m);
        Ok(())
    })
}

/// Destroys a decomposition handle. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn cl_decomposition_free(d: *mut ClDecomposition) {
    if !d.is_null() {
        drop(Box::from_raw(d));
    }
}

/// Runs a verification suite ("dims", "casimir", "traces", "projectors", "decomp",
/// "duality", "qdim", "oracle" or "all") and returns its JSON report. Returns
/// `VerifyFailed` (with the report still written) when any check fails.
#[no_mangle]
pub unsafe extern "C" fn cl_verify(suite: *const c_char, quick: bool, report: *mut *mut c_char) -> ClStatus {
    guard(|| {
        check_out(report)?;
        let name = text(suite, "suite")?;
        let s = Suite::EACH
            .into_iter()
            .chain([Suite::All])
            .find(|s| s.name() == name)
            .ok_or_else(|| Fail(ClStatus::InvalidArgument, format!("unknown suite {name:?}")))?;
        let opts = SuiteOptions { quick, store: FixtureStore::resolve(None), ..SuiteOptions::default() };
        let rep = suites::run(s, &opts);
        write_out(report, owned(rep.render(Format::Json)))?;
        if rep.passed() {
            Ok(())
        } else {
            let failed = rep.entries.iter().filter(|e| e.status == Status::Fail).count();
            Err(Fail(ClStatus::VerifyFailed, format!("{failed} checks failed in suite {name}")))
        }
    })
}
