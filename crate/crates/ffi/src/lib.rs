//! C ABI over `bskernel`.
//!
//! Every fallible function returns a [`BskStatus`] and writes its result
//! through an out-pointer, which is left untouched on failure. The message of
//! the most recent failure on the calling thread is available from
//! [`bsk_last_error_message`]. Handles are created by `*_new` functions and
//! released by the matching `*_free`; passing null to a `*_free` is a no-op.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use bskernel::error::Error;
use bskernel::msm::{
    msm_bs_closed_form, msm_quadrature, ClosedFormImage, FunctionKind, Integrand, MsmParams, Side,
};
use bskernel::pathway::{
    pathway_bs_closed_form, pathway_density, pathway_norm_const, pathway_quadrature,
    PathwayDensityParams, PathwayParams,
};
use bskernel::series::SeriesEval;
use bskernel::special::{
    appell_f3, bessel_first_kind, bessel_struve_kernel, gauss_2f1, struve, F3Args,
};
use bskernel::verify::run_suite;
use bskernel::wright::{wright_delta, wright_eval, WrightSpec};

/// Result codes. `BSK_OK` is zero; everything else is a failure.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BskStatus {
    BskOk = 0,
    BskNullPointer = 1,
    BskInvalidUtf8 = 2,
    BskPole = 3,
    BskOverflow = 4,
    BskDomain = 5,
    BskDomainUnsupported = 6,
    BskConvergence = 7,
    BskTermCap = 8,
    BskPrecondition = 9,
    BskQuadrature = 10,
    BskUnknownSuite = 11,
    BskInvalidArgument = 12,
    BskPanic = 13,
}

impl From<&Error> for BskStatus {
    fn from(e: &Error) -> Self {
        match e {
            Error::Pole(_) => BskStatus::BskPole,
            Error::Overflow(_) => BskStatus::BskOverflow,
            Error::Domain(_) => BskStatus::BskDomain,
            Error::DomainUnsupported(_) => BskStatus::BskDomainUnsupported,
            Error::Convergence(_) => BskStatus::BskConvergence,
            Error::TermCap(_) => BskStatus::BskTermCap,
            Error::Precondition(_) => BskStatus::BskPrecondition,
            Error::Quadrature { .. } => BskStatus::BskQuadrature,
            Error::UnknownSuite(_) => BskStatus::BskUnknownSuite,
        }
    }
}

/// A value with its truncation diagnostics.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BskEval {
    pub value: f64,
    pub abs_error_est: f64,
    pub terms_used: usize,
}

impl From<SeriesEval> for BskEval {
    fn from(s: SeriesEval) -> Self {
        BskEval {
            value: s.value,
            abs_error_est: s.abs_error_est,
            terms_used: s.terms_used,
        }
    }
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BskMsmParams {
    pub alpha: f64,
    pub alpha_prime: f64,
    pub beta: f64,
    pub beta_prime: f64,
    pub gamma: f64,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BskSide {
    BskLeft = 0,
    BskRight = 1,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BskKind {
    BskMonomial = 0,
    BskBsKernel = 1,
    BskExp = 2,
    BskExpm1 = 3,
    BskI0PlusL0 = 4,
    BskTwoI1PlusTwoL1 = 5,
}

/// `t^{rho−1} K(w)`; `nu` and `lambda` are read only for `BSK_BS_KERNEL`.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BskIntegrand {
    pub kind: BskKind,
    pub nu: f64,
    pub lambda: f64,
    pub rho: f64,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BskPathwayParams {
    pub eta: f64,
    pub a: f64,
    pub pathway_alpha: f64,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BskDensityParams {
    pub gamma_shape: f64,
    pub delta: f64,
    pub beta_shape: f64,
    pub a: f64,
    pub pathway_alpha: f64,
}

/// Opaque Fox-Wright parameter list.
pub struct BskWrightSpec {
    spec: WrightSpec,
}

/// Opaque closed-form operator image, evaluable at any `x > 0`.
pub struct BskImage {
    image: ClosedFormImage,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_last_error(msg: String) {
    let c = CString::new(msg).unwrap_or_else(|e| {
        let cut = e.nul_position();
        CString::new(&e.into_vec()[..cut]).expect("prefix has no NUL")
    });
    LAST_ERROR.with(|slot| *slot.borrow_mut() = c);
}

/// Runs `body` with panics and errors mapped to status codes.
fn guard<F>(body: F) -> BskStatus
where
    F: FnOnce() -> Result<(), (BskStatus, String)>,
{
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => BskStatus::BskOk,
        Ok(Err((status, msg))) => {
            set_last_error(msg);
            status
        }
        Err(_) => {
            set_last_error("internal panic".into());
            BskStatus::BskPanic
        }
    }
}

fn lib(e: Error) -> (BskStatus, String) {
    ((&e).into(), e.to_string())
}

fn null(name: &str) -> (BskStatus, String) {
    (BskStatus::BskNullPointer, format!("{name} is null"))
}

/// # Safety
/// `out` must be null or valid for a write of `T`.
unsafe fn write<T>(out: *mut T, name: &str, value: T) -> Result<(), (BskStatus, String)> {
    if out.is_null() {
        return Err(null(name));
    }
    out.write(value);
    Ok(())
}

fn side(s: BskSide) -> Side {
    match s {
        BskSide::BskLeft => Side::Left,
        BskSide::BskRight => Side::Right,
    }
}

fn integrand(i: BskIntegrand) -> Integrand {
    let kind = match i.kind {
        BskKind::BskMonomial => FunctionKind::Monomial,
        BskKind::BskBsKernel => FunctionKind::BsKernel {
            nu: i.nu,
            lambda: i.lambda,
        },
        BskKind::BskExp => FunctionKind::Exp,
        BskKind::BskExpm1 => FunctionKind::ExpM1OverT,
        BskKind::BskI0PlusL0 => FunctionKind::I0PlusL0,
        BskKind::BskTwoI1PlusTwoL1 => FunctionKind::TwoI1PlusTwoL1OverT,
    };
    Integrand::new(kind, i.rho)
}

fn msm_params(p: BskMsmParams) -> MsmParams {
    MsmParams {
        alpha: p.alpha,
        alpha_prime: p.alpha_prime,
        beta: p.beta,
        beta_prime: p.beta_prime,
        gamma: p.gamma,
    }
}

fn pathway_params(p: BskPathwayParams) -> PathwayParams {
    PathwayParams {
        eta: p.eta,
        a: p.a,
        pathway_alpha: p.pathway_alpha,
    }
}

fn density_params(p: BskDensityParams) -> PathwayDensityParams {
    PathwayDensityParams {
        gamma_shape: p.gamma_shape,
        delta: p.delta,
        beta_shape: p.beta_shape,
        a: p.a,
        pathway_alpha: p.pathway_alpha,
    }
}

/// Message of the last failure on this thread, empty if none. The pointer
/// stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn bsk_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ptr())
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn bsk_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// # Safety
/// `out` must be valid for a write.
#[no_mangle]
pub unsafe extern "C" fn bsk_gamma(x: f64, out: *mut f64) -> BskStatus {
    guard(|| write(out, "out", bskernel::gamma::gamma(x).map_err(lib)?))
}

/// `S_ν(u)`.
///
/// # Safety
/// `out` must be valid for a write.
#[no_mangle]
pub unsafe extern "C" fn bsk_kernel(nu: f64, u: f64, out: *mut BskEval) -> BskStatus {
    guard(|| write(out, "out", bessel_struve_kernel(nu, u).map_err(lib)?.into()))
}

/// `J_ν(z)`, or `I_ν(z)` when `modified` is nonzero.
///
/// # Safety
/// `out` must be valid for a write.
#[no_mangle]
pub unsafe extern "C" fn bsk_bessel(
    nu: f64,
    z: f64,
    modified: bool,
    out: *mut BskEval,
) -> BskStatus {
    guard(|| {
        write(
            out,
            "out",
            bessel_first_kind(nu, z, modified).map_err(lib)?.into(),
        )
    })
}

/// `H_ν(z)`, or `L_ν(z)` when `modified` is nonzero.
///
/// # Safety
/// `out` must be valid for a write.
#[no_mangle]
pub unsafe extern "C" fn bsk_struve(
    nu: f64,
    z: f64,
    modified: bool,
    out: *mut BskEval,
) -> BskStatus {
    guard(|| write(out, "out", struve(nu, z, modified).map_err(lib)?.into()))
}

/// # Safety
/// `out` must be valid for a write.
#[no_mangle]
pub unsafe extern "C" fn bsk_hyp2f1(
    a: f64,
    b: f64,
    c: f64,
    z: f64,
    out: *mut BskEval,
) -> BskStatus {
    guard(|| write(out, "out", gauss_2f1(a, b, c, z).map_err(lib)?.into()))
}

/// Appell `F3(α, α′, β, β′; γ; x, y)`.
///
/// # Safety
/// `out` must be valid for a write.
#[no_mangle]
#[allow(clippy::too_many_arguments)]
pub unsafe extern "C" fn bsk_appell_f3(
    alpha: f64,
    alpha_prime: f64,
    beta: f64,
    beta_prime: f64,
    gamma: f64,
    x: f64,
    y: f64,
    out: *mut BskEval,
) -> BskStatus {
    let args = F3Args {
        alpha,
        alpha_prime,
        beta,
        beta_prime,
        gamma,
        x,
        y,
    };
    guard(|| write(out, "out", appell_f3(args).map_err(lib)?.into()))
}

/// Empty spec; append pairs with [`bsk_wright_push_upper`] and
/// [`bsk_wright_push_lower`]. Never returns null.
#[no_mangle]
pub extern "C" fn bsk_wright_new() -> *mut BskWrightSpec {
    Box::into_raw(Box::new(BskWrightSpec {
        spec: WrightSpec::new(Vec::new(), Vec::new()),
    }))
}

/// # Safety
/// `spec` must be null or come from [`bsk_wright_new`] and not be freed yet.
#[no_mangle]
pub unsafe extern "C" fn bsk_wright_free(spec: *mut BskWrightSpec) {
    if !spec.is_null() {
        drop(Box::from_raw(spec));
    }
}

/// # Safety
/// `spec` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn bsk_wright_push_upper(
    spec: *mut BskWrightSpec,
    a: f64,
    slope: f64,
) -> BskStatus {
    guard(|| {
        let s = spec.as_mut().ok_or_else(|| null("spec"))?;
        s.spec.upper.push((a, slope));
        Ok(())
    })
}

/// # Safety
/// `spec` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn bsk_wright_push_lower(
    spec: *mut BskWrightSpec,
    b: f64,
    slope: f64,
) -> BskStatus {
    guard(|| {
        let s = spec.as_mut().ok_or_else(|| null("spec"))?;
        s.spec.lower.push((b, slope));
        Ok(())
    })
}

/// `Σ lower slopes − Σ upper slopes`; the series is entire iff this is > −1.
///
/// # Safety
/// `spec` must be a live handle and `out` valid for a write.
#[no_mangle]
pub unsafe extern "C" fn bsk_wright_delta(spec: *const BskWrightSpec, out: *mut f64) -> BskStatus {
    guard(|| {
        let s = spec.as_ref().ok_or_else(|| null("spec"))?;
        write(out, "out", wright_delta(&s.spec))
    })
}

/// `pΨq(z)` summed to relative tolerance `tol`.
///
/// # Safety
/// `spec` must be a live handle and `out` valid for a write.
#[no_mangle]
pub unsafe extern "C" fn bsk_wright_eval(
    spec: *const BskWrightSpec,
    z: f64,
    tol: f64,
    out: *mut BskEval,
) -> BskStatus {
    guard(|| {
        let s = spec.as_ref().ok_or_else(|| null("spec"))?;
        write(
            out,
            "out",
            wright_eval(&s.spec, z, tol).map_err(lib)?.into(),
        )
    })
}

/// Closed-form MSM image of `integrand` on the given side. On success
/// `*out` owns a new handle to release with [`bsk_image_free`].
///
/// # Safety
/// `out` must be valid for a write.
#[no_mangle]
pub unsafe extern "C" fn bsk_msm_image_new(
    side_: BskSide,
    params: BskMsmParams,
    integrand_: BskIntegrand,
    out: *mut *mut BskImage,
) -> BskStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let image = msm_bs_closed_form(side(side_), &msm_params(params), integrand(integrand_))
            .map_err(lib)?;
        out.write(Box::into_raw(Box::new(BskImage { image })));
        Ok(())
    })
}

/// Closed-form pathway image; ownership as for [`bsk_msm_image_new`].
///
/// # Safety
/// `out` must be valid for a write.
#[no_mangle]
pub unsafe extern "C" fn bsk_pathway_image_new(
    params: BskPathwayParams,
    integrand_: BskIntegrand,
    out: *mut *mut BskImage,
) -> BskStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let image =
            pathway_bs_closed_form(&pathway_params(params), integrand(integrand_)).map_err(lib)?;
        out.write(Box::into_raw(Box::new(BskImage { image })));
        Ok(())
    })
}

/// # Safety
/// `image` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn bsk_image_free(image: *mut BskImage) {
    if !image.is_null() {
        drop(Box::from_raw(image));
    }
}

/// # Safety
/// `image` must be a live handle and `out` valid for a write.
#[no_mangle]
pub unsafe extern "C" fn bsk_image_eval(
    image: *const BskImage,
    x: f64,
    out: *mut BskEval,
) -> BskStatus {
    guard(|| {
        let i = image.as_ref().ok_or_else(|| null("image"))?;
        write(out, "out", i.image.evaluate(x).map_err(lib)?.into())
    })
}

/// Reference value of the MSM image by quadrature of the defining integral.
///
/// # Safety
/// `out` must be valid for a write.
#[no_mangle]
pub unsafe extern "C" fn bsk_msm_quadrature(
    side_: BskSide,
    params: BskMsmParams,
    integrand_: BskIntegrand,
    x: f64,
    out: *mut BskEval,
) -> BskStatus {
    guard(|| {
        let v = msm_quadrature(side(side_), &msm_params(params), integrand(integrand_), x)
            .map_err(lib)?;
        write(out, "out", v.into())
    })
}

/// # Safety
/// `out` must be valid for a write.
#[no_mangle]
pub unsafe extern "C" fn bsk_pathway_quadrature(
    params: BskPathwayParams,
    integrand_: BskIntegrand,
    x: f64,
    out: *mut BskEval,
) -> BskStatus {
    guard(|| {
        let v =
            pathway_quadrature(&pathway_params(params), integrand(integrand_), x).map_err(lib)?;
        write(out, "out", v.into())
    })
}

/// # Safety
/// `out` must be valid for a write.
#[no_mangle]
pub unsafe extern "C" fn bsk_density(params: BskDensityParams, x: f64, out: *mut f64) -> BskStatus {
    guard(|| {
        write(
            out,
            "out",
            pathway_density(&density_params(params), x).map_err(lib)?,
        )
    })
}

/// # Safety
/// `out` must be valid for a write.
#[no_mangle]
pub unsafe extern "C" fn bsk_density_norm_const(
    params: BskDensityParams,
    out: *mut f64,
) -> BskStatus {
    guard(|| {
        write(
            out,
            "out",
            pathway_norm_const(&density_params(params)).map_err(lib)?,
        )
    })
}

/// Runs a verification suite and writes its JSON report to `*out_json`,
/// to be released with [`bsk_string_free`]. `tolerance_override <= 0`
/// keeps the default tolerances. `*passed` is set to whether every row met
/// its expectation.
///
/// # Safety
/// `suite` must be a NUL-terminated string; `out_json` and `passed` must be
/// valid for writes.
#[no_mangle]
pub unsafe extern "C" fn bsk_run_suite(
    suite: *const c_char,
    tolerance_override: f64,
    out_json: *mut *mut c_char,
    passed: *mut bool,
) -> BskStatus {
    guard(|| {
        if suite.is_null() {
            return Err(null("suite"));
        }
        if out_json.is_null() {
            return Err(null("out_json"));
        }
        if passed.is_null() {
            return Err(null("passed"));
        }
        let name = CStr::from_ptr(suite)
            .to_str()
            .map_err(|e| (BskStatus::BskInvalidUtf8, e.to_string()))?;
        let tol = (tolerance_override > 0.0).then_some(tolerance_override);
        let report = run_suite(name, tol).map_err(lib)?;
        let json = serde_json::to_string(&report)
            .map_err(|e| (BskStatus::BskInvalidArgument, e.to_string()))?;
        let c = CString::new(json).expect("JSON has no NUL");
        passed.write(report.passed());
        out_json.write(c.into_raw());
        Ok(())
    })
}

/// # Safety
/// `s` must be null or a string returned by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn bsk_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
