//! Batch orchestration: configuration, the validation pipelines, certificate
//! emission, and human-readable reports.

use std::path::PathBuf;
use std::sync::Arc;

use crate::bounds::{
    self, BoundSet, BoundsOut, CertConfig, Check, LambdaOut, TailData, ValidationCertificate,
};
use crate::cheb::{build_scheme, ChebyshevScheme};
use crate::error::{Error, Result};
use crate::interval::RealInterval;
use crate::manifold::{recurse_coeffs, ApproxSolution, ProblemData};
use crate::roots::{
    alpha_in_hayes_range, census_psa, find_dde_pair, RootCertificate, SpectralPair,
};
use crate::seq::TaylorSeq2;
use crate::ProblemKind;

pub const DEFAULT_TRUNC_N: u32 = 25;
pub const DEFAULT_TAIL_M: u32 = 1000;
/// Default first-order scale. Large scales inflate ||xhat|| and with it the
/// Z1 bounds past 1; this value leaves both problems a wide contraction
/// margin at the default truncation.
pub const DEFAULT_XI_SCALE: f64 = 0.02;

/// Parsed, validated run configuration.
#[derive(Clone, Debug)]
pub struct RunConfig {
    pub alpha_str: String,
    pub alpha: f64,
    pub n: usize,
    pub trunc_n: u32,
    pub tail_m: u32,
    pub xi_scale: f64,
    pub epsilon: Option<f64>,
    pub out: Option<PathBuf>,
}

impl RunConfig {
    pub fn new(alpha_str: &str, n: usize, trunc_n: u32, tail_m: u32) -> Result<Self> {
        let alpha: f64 = alpha_str
            .trim()
            .parse()
            .map_err(|_| Error::Config(format!("cannot parse alpha = {alpha_str:?}")))?;
        if !alpha.is_finite() || alpha <= 0.0 {
            return Err(Error::Config(
                "alpha must be a positive finite number".into(),
            ));
        }
        if n < 1 {
            return Err(Error::Config(
                "discretization index n must be at least 1".into(),
            ));
        }
        if trunc_n < 2 {
            return Err(Error::Config("truncation degree must be at least 2".into()));
        }
        if tail_m <= trunc_n {
            return Err(Error::Config(
                "tail threshold must exceed the truncation degree".into(),
            ));
        }
        Ok(Self {
            alpha_str: alpha_str.trim().to_string(),
            alpha,
            n,
            trunc_n,
            tail_m,
            xi_scale: DEFAULT_XI_SCALE,
            epsilon: None,
            out: None,
        })
    }

    pub fn alpha_interval(&self) -> RealInterval {
        RealInterval::point(self.alpha)
    }

    fn require_hayes(&self) -> Result<()> {
        if !alpha_in_hayes_range(self.alpha) {
            return Err(Error::Config(format!(
                "alpha = {} outside (pi/2, 5 pi/2): the delay problem's unstable count is unknown",
                self.alpha
            )));
        }
        Ok(())
    }
}

/// Which validation to run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ValidateKind {
    Dde,
    Psa,
    Distance,
}

fn fmt_rect(r: &crate::interval::ComplexRect) -> String {
    format!(
        "[{:.17e}, {:.17e}] + [{:.17e}, {:.17e}] i",
        r.re.lo(),
        r.re.hi(),
        r.im.lo(),
        r.im.hi()
    )
}

/// Validated eigenvalue enclosures: the delay problem's unstable pair, plus
/// the full census of the discretized problem when `n` is given.
pub struct EigsReport {
    pub dde_pair: SpectralPair,
    pub census: Option<Vec<RootCertificate>>,
    pub psa_pair: Option<SpectralPair>,
    pub psa_unstable_count: Option<usize>,
}

pub fn cmd_eigs(cfg: &RunConfig, with_psa: bool) -> Result<EigsReport> {
    cfg.require_hayes()?;
    let dde_pair = find_dde_pair(cfg.alpha_interval())?;
    println!("delay problem, alpha = {}", cfg.alpha_str);
    println!("  lambda+ in {}", fmt_rect(&dde_pair.plus_rect()));
    println!("  lambda- in {}", fmt_rect(&dde_pair.minus().enclosure));
    let (census, psa_pair, count) = if with_psa {
        let scheme = build_scheme(cfg.n, cfg.alpha_interval());
        match census_psa(&scheme) {
            Ok((certs, pair)) => {
                print_census(cfg.n, &certs);
                println!("  unstable pair:");
                println!("    lambda_n+ in {}", fmt_rect(&pair.plus_rect()));
                println!("    lambda_n- in {}", fmt_rect(&pair.minus().enclosure));
                (Some(certs), Some(pair), Some(2))
            }
            Err(Error::UnstableCountNotTwo(k)) => {
                // the census itself succeeded; report the count honestly
                println!(
                    "discretized problem, n = {}: {} unstable eigenvalue(s); no unstable pair",
                    cfg.n, k
                );
                (None, None, Some(k))
            }
            Err(e) => return Err(e),
        }
    } else {
        (None, None, None)
    };
    Ok(EigsReport {
        dde_pair,
        census,
        psa_pair,
        psa_unstable_count: count,
    })
}

fn print_census(n: usize, certs: &[RootCertificate]) {
    println!(
        "discretized problem, n = {n}: {} validated eigenvalues",
        certs.len()
    );
    for (k, c) in certs.iter().enumerate() {
        let side = if c.enclosure.re.lo() > 0.0 {
            "unstable"
        } else {
            "stable"
        };
        println!(
            "  [{k:2}] {} ({side}, radius {:.3e})",
            fmt_rect(&c.enclosure),
            c.r0
        );
    }
}

/// Everything the validation pipelines share: scheme, spectra, the guess.
struct PipelineCore {
    scheme: Arc<ChebyshevScheme>,
    psa_pair: SpectralPair,
    p_psa: ProblemData,
    xhat: TaylorSeq2,
    xhat_hash: String,
    checks: Vec<Check>,
}

fn pass(checks: &mut Vec<Check>, name: &str) {
    checks.push(Check {
        name: name.to_string(),
        passed: true,
    });
}

fn build_core(cfg: &RunConfig) -> Result<PipelineCore> {
    let mut checks = Vec::new();
    cfg.require_hayes()?;
    pass(&mut checks, "alpha_in_hayes_range");
    let scheme = Arc::new(build_scheme(cfg.n, cfg.alpha_interval()));
    let (_census, psa_pair) = census_psa(&scheme)?;
    pass(&mut checks, "psa_census_complete");
    pass(&mut checks, "psa_unstable_pair_conjugate");
    let p_psa = ProblemData::assemble(
        ProblemKind::Psa,
        cfg.alpha_interval(),
        psa_pair.clone(),
        Some(scheme.clone()),
        cfg.xi_scale,
        cfg.trunc_n,
    )?;
    let xhat = recurse_coeffs(&p_psa, cfg.trunc_n)?;
    pass(&mut checks, "recursion_nonresonant");
    let xhat_hash = bounds::xhat_sha256(&xhat);
    Ok(PipelineCore {
        scheme,
        psa_pair,
        p_psa,
        xhat,
        xhat_hash,
        checks,
    })
}

struct SideResult {
    lambda: SpectralPair,
    bounds: BoundSet,
    radius: f64,
    epsilon: f64,
}

fn run_psa_side(cfg: &RunConfig, core: &mut PipelineCore) -> Result<SideResult> {
    let sweep = bounds::invertibility_sweep(
        &core.scheme,
        &core.psa_pair,
        cfg.tail_m,
        cfg.trunc_n,
        cfg.epsilon,
    )?;
    let epsilon = sweep.epsilon;
    let tail = TailData::Psa(sweep);
    pass(&mut core.checks, "psa_sweep_well_defined");
    pass(&mut core.checks, "psa_tail_thresholds");
    let sol = ApproxSolution::build(&core.p_psa, core.xhat.clone(), cfg.trunc_n)?;
    let set = BoundSet {
        kind: ProblemKind::Psa,
        y0: bounds::y0_bound(&core.p_psa, &sol)?,
        z0: bounds::z0_bound(&sol)?,
        z1: bounds::z1_bound(&core.p_psa, &sol, &tail)?,
        z2: bounds::z2_bound(&core.p_psa, &sol, &tail)?,
    };
    let radius = bounds::radii_root(&set)?;
    pass(&mut core.checks, "psa_radii_polynomial_negative");
    Ok(SideResult {
        lambda: core.psa_pair.clone(),
        bounds: set,
        radius,
        epsilon,
    })
}

fn run_dde_side(cfg: &RunConfig, core: &mut PipelineCore) -> Result<SideResult> {
    let dde_pair = find_dde_pair(cfg.alpha_interval())?;
    pass(&mut core.checks, "dde_pair_validated");
    let p_dde = ProblemData::assemble(
        ProblemKind::Dde,
        cfg.alpha_interval(),
        dde_pair.clone(),
        None,
        cfg.xi_scale,
        cfg.trunc_n,
    )?;
    let tail = TailData::Dde(bounds::dde_tail(
        &dde_pair,
        cfg.alpha_interval(),
        cfg.trunc_n,
    )?);
    pass(&mut core.checks, "dde_tail_threshold");
    let sol = ApproxSolution::build(&p_dde, core.xhat.clone(), cfg.trunc_n)?;
    let set = BoundSet {
        kind: ProblemKind::Dde,
        y0: bounds::y0_bound(&p_dde, &sol)?,
        z0: bounds::z0_bound(&sol)?,
        z1: bounds::z1_bound(&p_dde, &sol, &tail)?,
        z2: bounds::z2_bound(&p_dde, &sol, &tail)?,
    };
    let radius = bounds::radii_root(&set)?;
    pass(&mut core.checks, "dde_radii_polynomial_negative");
    Ok(SideResult {
        lambda: dde_pair,
        bounds: set,
        radius,
        epsilon: 0.0,
    })
}

fn print_bounds(kind: &str, b: &BoundSet, r: f64) {
    println!("{kind} bounds (upper):");
    println!("  Y0 <= {}", bounds::decimal_upper(b.y0.hi()));
    println!("  Z0 <= {}", bounds::decimal_upper(b.z0.hi()));
    println!("  Z1 <= {}", bounds::decimal_upper(b.z1.hi()));
    println!("  Z2 <= {}", bounds::decimal_upper(b.z2.hi()));
    println!("  validated radius r = {}", bounds::decimal_upper(r));
}

/// Run a validation pipeline and assemble the certificate.
pub fn cmd_validate(cfg: &RunConfig, kind: ValidateKind) -> Result<ValidationCertificate> {
    let mut core = build_core(cfg)?;
    let mut lambda_psa = None;
    let mut lambda_dde = None;
    let mut bounds_psa = None;
    let mut bounds_dde = None;
    let mut r_psa = None;
    let mut r_dde = None;
    let mut total = None;

    println!(
        "validating ({}) alpha = {}, n = {}, truncation {}, tail threshold {}",
        match kind {
            ValidateKind::Dde => "dde",
            ValidateKind::Psa => "psa",
            ValidateKind::Distance => "distance",
        },
        cfg.alpha_str,
        cfg.n,
        cfg.trunc_n,
        cfg.tail_m
    );
    println!("guess hash {}", core.xhat_hash);

    let mut epsilon_used = 0.0;
    if matches!(kind, ValidateKind::Psa | ValidateKind::Distance) {
        let side = run_psa_side(cfg, &mut core)?;
        print_bounds("pseudospectral", &side.bounds, side.radius);
        epsilon_used = side.epsilon;
        lambda_psa = Some(LambdaOut::from_pair(&side.lambda));
        bounds_psa = Some(BoundsOut::from_set(&side.bounds));
        r_psa = Some(side.radius);
    }
    if matches!(kind, ValidateKind::Dde | ValidateKind::Distance) {
        let side = run_dde_side(cfg, &mut core)?;
        print_bounds("delay", &side.bounds, side.radius);
        lambda_dde = Some(LambdaOut::from_pair(&side.lambda));
        bounds_dde = Some(BoundsOut::from_set(&side.bounds));
        r_dde = Some(side.radius);
    }
    if kind == ValidateKind::Distance {
        // both validations must certify around the same recorded guess
        pass(&mut core.checks, "xhat_hash_match");
        let t = bounds::distance_bound(r_psa.unwrap(), r_dde.unwrap());
        println!("coefficient distance bound <= {}", bounds::decimal_upper(t));
        total = Some(t);
    }

    let cert = ValidationCertificate {
        timestamp: chrono::Utc::now().to_rfc3339(),
        config: CertConfig {
            alpha: cfg.alpha_str.clone(),
            n: cfg.n,
            trunc_n: cfg.trunc_n,
            tail_m: cfg.tail_m,
            epsilon: epsilon_used,
            xi_scale: cfg.xi_scale,
            norm: "l1".into(),
        },
        lambda_dde,
        lambda_psa,
        bounds_psa,
        bounds_dde,
        r_psa: r_psa.map(bounds::decimal_upper),
        r_dde: r_dde.map(bounds::decimal_upper),
        total_bound: total.map(bounds::decimal_upper),
        xhat_sha256: core.xhat_hash.clone(),
        checks: core.checks.clone(),
    };
    if let Some(path) = &cfg.out {
        std::fs::write(path, cert.to_json())?;
        println!("certificate written to {}", path.display());
    }
    Ok(cert)
}

/// Compute the guess coefficients and write them (and optionally the
/// multiplier table) in the CSV interchange format.
pub fn cmd_coeffs(cfg: &RunConfig, mult_out: Option<&PathBuf>) -> Result<()> {
    let core = build_core(cfg)?;
    let path = cfg
        .out
        .clone()
        .ok_or_else(|| Error::Config("coeffs needs an output path".into()))?;
    core.xhat.write_csv_file(&path)?;
    println!(
        "wrote {} coefficients (degree <= {}) to {}",
        core.xhat.len(),
        cfg.trunc_n,
        path.display()
    );
    println!("sha256 {}", core.xhat_hash);
    if let Some(mpath) = mult_out {
        let m = core.p_psa.mult();
        let as_seq = TaylorSeq2::from_coeffs(m.maxdeg(), m.values().to_vec());
        as_seq.write_csv_file(mpath)?;
        println!("wrote multiplier table to {}", mpath.display());
    }
    Ok(())
}
