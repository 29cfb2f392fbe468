use std::f64::consts::PI;
use std::path::Path;

use opalg_core::clifford::{build_generators, tower_traces, verify_periodicity, CliffordTower, QuadraticSignature};
use opalg_core::curvature::{bianchi_residual, exemplar, standard_star, star_in_pm_basis, tau_constant, Exemplar};
use opalg_core::dynamics::{formal_temperature, perturbed_star, HodgeGenerator, BOLTZMANN, HBAR, PLANCK_TIME};
use opalg_core::einstein::{check_qvee, make_refinement, solve_qvee, QveeReport, Refinement};
use opalg_core::gns::{gns_representation, surface_state_representation, AlgebraState, FiniteAlgebra};
use opalg_core::spectral::operator_norm;
use opalg_core::torus::{
    homology_pairing, integrate, perturbed_stationarity, poincare_dual, state_functional, stationarity_derivative,
    torus_generator, TorusSurfaceClass,
};
use opalg_core::{ComplexMatrix, C64};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::cli::{
    CliffordArgs, DynamicsArgs, DynamicsCheck, GlobalArgs, GnsArgs, ManifoldArgs, SolveArgs, StatesArgs, StatesCheck,
};
use crate::error::{CliError, Result};
use crate::io::{complex_value, form_value, matrix_value, read_exemplar, read_form, read_matrix, read_state};
use crate::report::Report;

/// Finite-difference bound for stationarity; independent of `--tol`.
pub const STATIONARITY_TOL: f64 = 1e-8;

/// Accepted relative deviation from the rounded reference values
/// `T ≈ 7.06e31 K` and `ħβ ≈ 1.07e-43 s`.
pub const CONSTANTS_REL_TOL: f64 = 0.01;
pub const REFERENCE_TEMPERATURE: f64 = 7.06e31;
pub const REFERENCE_PERIOD: f64 = 1.07e-43;

fn random_matrix(rng: &mut ChaCha8Rng, n: usize) -> ComplexMatrix {
    ComplexMatrix::from_fn(n, n, |_, _| C64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
}

fn path_value(p: &Path) -> Value {
    json!(p.display().to_string())
}

fn model_from(name: &str, params: &[f64]) -> Result<opalg_core::curvature::ManifoldModel> {
    let name: Exemplar = name.parse()?;
    let params = if params.is_empty() { vec![1.0; name.param_count()] } else { params.to_vec() };
    Ok(exemplar(name, &params)?)
}

fn qvee_value(r: &QveeReport) -> Value {
    json!({
        "self_adjoint_residual": r.self_adjoint_residual,
        "bianchi_residual": r.bianchi_residual,
        "einstein_residual": r.einstein_residual,
        "lambda": r.lambda,
        "tol": r.tol,
        "solves": r.solves,
    })
}

fn pm_generator() -> Result<HodgeGenerator> {
    Ok(HodgeGenerator::new(make_refinement(star_in_pm_basis())?)?)
}

pub fn manifold(args: &ManifoldArgs, g: &GlobalArgs) -> Result<Report> {
    let (name, params) = match (&args.spec, &args.name) {
        (Some(path), _) => {
            let (name, params) = read_exemplar(path)?;
            (name.name().to_string(), params)
        }
        (None, Some(name)) => (name.clone(), args.params.clone()),
        (None, None) => return Err(CliError::Usage("an exemplar name or --spec is required".into())),
    };
    let model = model_from(&name, &params)?;
    let mut report = Report::new("manifold", json!({ "name": name, "params": model.params }));
    let tol = g.tol;
    report.tolerance("identity", tol);

    let r = model.operator();
    let refinement = make_refinement(star_in_pm_basis())?;
    let gen = HodgeGenerator::new(refinement.clone())?;
    let tau = tau_constant(&r)?;
    let bianchi = bianchi_residual(&r, &standard_star())?;
    let commutator = model.curvature.einstein_commutator_norm();
    let ric0 = model.curvature.ric0_norm();
    let fixed = gen.is_fixed_point(&r, tol)?;
    let energy = gen.energy(&r)?;
    let qvee = check_qvee(&r, &refinement, tol)?;
    let is_einstein = commutator <= tol;
    let lambda = is_einstein.then(|| model.lambda_from_scal());

    report
        .result("scal", model.curvature.scal)
        .result("lambda", lambda)
        .result("tau_R", tau)
        .result("bianchi_residual", bianchi)
        .result("einstein_commutator", commutator)
        .result("ric0_norm", ric0)
        .result("fixed_point", fixed.fixed)
        .result("energy", energy)
        .result("is_einstein", is_einstein)
        .result("qvee", qvee_value(&qvee))
        .result("operator", matrix_value(&r));

    let c = &mut report.checks;
    c.below("bianchi_residual", bianchi, tol);
    c.holds("einstein_tests_agree", is_einstein == (ric0 <= tol) && is_einstein == fixed.fixed);
    c.holds("einstein_matches_model", is_einstein == model.expected_einstein);
    if let Some(lambda) = lambda {
        c.below("tau_R_minus_lambda_over_3", (tau - lambda / 3.0).abs(), tol);
        c.below("energy_minus_pi_lambda_over_6", (energy - PI * lambda / 6.0).abs(), tol);
        c.holds("solves_qvee", qvee.solves);
    }
    Ok(report)
}

pub fn clifford(args: &CliffordArgs, g: &GlobalArgs) -> Result<Report> {
    let sig: QuadraticSignature = args.signature.parse()?;
    let m = sig.m();
    let max = opalg_core::clifford::MAX_PERIODICITY_M;
    if m > max {
        return Err(CliError::Usage(format!("signature {sig} has r+s = {m}, the limit is {max}")));
    }
    let mut report = Report::new("clifford", json!({ "signature": sig.to_string(), "levels": args.levels }));
    report.tolerance("relations", g.tol);
    let tower = if m == 0 { CliffordTower::scalar() } else { build_generators(sig)? };
    let residual = tower.relations_residual();
    let span = tower.span_dimension()?;

    // τ(e₁²) = ±1 and τ(e₁e₂) = 0 at every level
    let mut samples = Vec::new();
    let mut samples_invariant = true;
    let probes: Vec<(&str, ComplexMatrix)> = match tower.generators.as_slice() {
        [] => vec![("1", ComplexMatrix::identity(1))],
        [e1] => vec![("e1*e1", e1 * e1)],
        [e1, e2, ..] => vec![("e1*e1", e1 * e1), ("e1*e2", e1 * e2)],
    };
    for (label, a) in &probes {
        let traces = tower_traces(a, args.levels)?;
        samples_invariant &= traces.iter().all(|&t| t == traces[0]);
        samples.push(json!({ "element": label, "traces": traces.iter().map(|&t| complex_value(t)).collect::<Vec<_>>() }));
    }

    report
        .result("m", m)
        .result("generators", tower.generators.len())
        .result("matrix_dim", tower.dim())
        .result("relations_residual", residual)
        .result("span_dim", span)
        .result("trace_samples", samples);
    report.checks.below("relations_residual", residual, g.tol);
    report.checks.holds("span_dim_is_2^m", span == 1 << m);
    report.checks.holds("trace_tower_invariant", samples_invariant);
    if m % 2 == 0 {
        let p = verify_periodicity(sig)?;
        report.result(
            "periodicity",
            json!({
                "matrix_dim": p.matrix_dim,
                "matrix_dim_next": p.matrix_dim_next,
                "span_dim": p.span_dim,
                "span_dim_next": p.span_dim_next,
                "relations_residual": p.relations_residual,
                "holds": p.holds(),
            }),
        );
        report.checks.holds("periodicity", p.holds());
    }
    Ok(report)
}

fn balanced_star(n: usize) -> Result<ComplexMatrix> {
    if n == 0 || n % 2 == 1 {
        return Err(CliError::Usage(format!("no balanced star in dimension {n}; pass --star")));
    }
    let signs: Vec<f64> = (0..n).map(|i| if i < n / 2 { 1.0 } else { -1.0 }).collect();
    Ok(ComplexMatrix::from_real_diag(&signs))
}

pub fn solve_einstein(args: &SolveArgs, g: &GlobalArgs) -> Result<Report> {
    let b = match &args.input {
        Some(path) => read_matrix(path)?,
        None => random_matrix(&mut ChaCha8Rng::seed_from_u64(g.seed), args.dim),
    };
    let n = b.ensure_square()?;
    let star = match &args.star {
        Some(path) => read_matrix(path)?,
        None => balanced_star(n)?,
    };
    if star.shape() != b.shape() {
        return Err(CliError::Usage(format!("B is {n}x{n} but the star is {}x{}", star.rows(), star.cols())));
    }
    let refinement: Refinement = make_refinement(star)?;
    let inputs = json!({
        "input": args.input.as_deref().map(path_value),
        "star": args.star.as_deref().map(path_value),
        "seed": args.input.is_none().then_some(g.seed),
        "b": matrix_value(&b),
        "star_matrix": matrix_value(refinement.star()),
    });
    let mut report = Report::new("solve-einstein", inputs);
    report.tolerance("qvee", g.tol).tolerance("trace", g.tol);
    let q = solve_qvee(&b, &refinement)?;
    let qvee = check_qvee(&q, &refinement, g.tol)?;
    let trace_gap = (q.normalized_trace().re - b.normalized_trace().re).abs();
    report
        .result("q", matrix_value(&q))
        .result("qvee", qvee_value(&qvee))
        .result("lambda", qvee.lambda)
        .result("re_tau_b", b.normalized_trace().re);
    report.checks.below("self_adjoint_residual", qvee.self_adjoint_residual, g.tol);
    report.checks.below("bianchi_residual", qvee.bianchi_residual, g.tol);
    report.checks.below("einstein_residual", qvee.einstein_residual, g.tol);
    report.checks.below("re_tau_q_minus_re_tau_b", trace_gap, g.tol);
    Ok(report)
}

pub fn gns(args: &GnsArgs, g: &GlobalArgs) -> Result<Report> {
    let alg: FiniteAlgebra = args.algebra.parse()?;
    let phi = match &args.state {
        Some(path) => AlgebraState::new(&alg, read_state(path)?)?,
        None => AlgebraState::trace(&alg),
    };
    let inputs = json!({
        "algebra": args.algebra,
        "state": args.state.as_deref().map(path_value),
        "densities": phi.densities().iter().map(matrix_value).collect::<Vec<_>>(),
    });
    let mut report = Report::new("gns", inputs);
    report.tolerance("representation", g.tol);
    let rep = gns_representation(&alg, &phi)?;
    report
        .result("ideal_dim", rep.ideal_dim)
        .result("j_dim", rep.j_dim)
        .result("gamma", rep.gamma)
        .result("gamma_trace", rep.gamma_trace)
        .result("gamma_per_summand", &rep.gamma_per_summand)
        .result("faithful", rep.faithful_state())
        .result("rho_dim", rep.dim())
        .result("rho_kernel_dim", rep.kernel_dim)
        .result("rho_check_residual", rep.check_residual())
        .result(
            "residuals",
            json!({
                "left_ideal": rep.left_ideal_residual,
                "multiplicativity": rep.multiplicativity_residual,
                "star": rep.star_residual,
                "submodule": rep.submodule_residual,
            }),
        );
    let c = &mut report.checks;
    c.below("rho_check_residual", rep.check_residual(), g.tol);
    c.below("gamma_routes_agree", rep.gamma_agreement(), g.tol);
    c.holds("gamma_in_unit_interval", (0.0..=1.0).contains(&rep.gamma));
    c.holds("gamma_one_iff_faithful", ((rep.gamma - 1.0).abs() <= g.tol) == rep.faithful_state());
    Ok(report)
}

pub fn dynamics(args: &DynamicsArgs, g: &GlobalArgs) -> Result<Report> {
    let model = model_from(&args.manifold, &args.params)?;
    let inputs = json!({
        "manifold": model.name.name(),
        "params": model.params,
        "check": format!("{:?}", args.check),
        "epsilon": args.epsilon,
        "sign": args.sign,
    });
    let mut report = Report::new("dynamics", inputs);
    report.tolerance("identity", g.tol);
    let gen = pm_generator()?;
    let r = model.operator();
    let all = args.check == DynamicsCheck::All;

    if all || args.check == DynamicsCheck::FixedPoint {
        let fp = gen.is_fixed_point(&r, g.tol)?;
        let ric0 = model.curvature.ric0_norm();
        let agrees = fp.fixed == (ric0 <= g.tol) && fp.flow_agrees;
        report
            .result("commutator_norm", fp.commutator_norm)
            .result("flow_residual", fp.flow_residual)
            .result("fixed", fp.fixed)
            .result("einstein_agrees", agrees);
        report.checks.holds("einstein_agrees", agrees);
    }
    if all || args.check == DynamicsCheck::Energy {
        let energy = gen.energy(&r)?;
        report.result("energy", energy);
        if model.curvature.einstein_commutator_norm() <= g.tol {
            let lambda = model.lambda_from_scal();
            report.result("lambda", lambda);
            report.checks.below("energy_minus_pi_lambda_over_6", (energy - PI * lambda / 6.0).abs(), g.tol);
        }
    }
    if all || args.check == DynamicsCheck::Flow {
        let id = ComplexMatrix::identity(6);
        let (mut period, mut unitary, mut group) = (0.0f64, 0.0f64, 0.0f64);
        for k in 0..=40 {
            let t = -2.0 + 0.1 * k as f64;
            let u = gen.star_power(t);
            period = period.max(operator_norm(&(&gen.star_power(t + 2.0) - &u)));
            unitary = unitary.max(operator_norm(&(&(&u * &u.conj_transpose()) - &id)));
            let s = 0.45 - 0.3 * t;
            group = group.max(operator_norm(&(&(&gen.star_power(s) * &u) - &gen.star_power(s + t))));
        }
        report.result(
            "flow",
            json!({ "period_residual": period, "unitarity_residual": unitary, "group_law_residual": group }),
        );
        report.checks.below("period_residual", period, g.tol);
        report.checks.below("unitarity_residual", unitary, g.tol);
        report.checks.below("group_law_residual", group, g.tol);
    }
    if all || args.check == DynamicsCheck::Perturbed {
        let p = perturbed_star(&gen, args.epsilon, args.sign)?;
        let commutes = gen.star().commutator(&p.star_prime()).frobenius_norm();
        let w = p.power(0.37);
        let unitary = operator_norm(&(&(&w * &w.conj_transpose()) - &ComplexMatrix::identity(6)));
        let at_one = (&p.power(1.0) - &p.star_prime()).frobenius_norm();
        report.result(
            "perturbed",
            json!({
                "phase": complex_value(p.phase()),
                "commutator_with_star": commutes,
                "unitarity_residual": unitary,
                "power_one_residual": at_one,
            }),
        );
        report.checks.below("perturbed_commutes_with_star", commutes, g.tol);
        report.checks.below("perturbed_unitarity", unitary, g.tol);
        report.checks.below("perturbed_power_one", at_one, g.tol);
    }
    Ok(report)
}

pub fn states(args: &StatesArgs, g: &GlobalArgs) -> Result<Report> {
    let coefficients: [i64; 6] = args
        .sigma
        .as_slice()
        .try_into()
        .map_err(|_| CliError::Usage(format!("--sigma needs 6 integers, got {}", args.sigma.len())))?;
    let sigma = TorusSurfaceClass::new(coefficients);
    let omega = read_form(&args.omega)?;
    let eta = poincare_dual(&sigma);
    let inputs = json!({
        "sigma": coefficients,
        "omega": path_value(&args.omega),
        "omega_coefficients": form_value(&omega),
        "check": format!("{:?}", args.check),
        "samples": args.samples,
        "epsilon": args.epsilon,
        "seed": g.seed,
    });
    let mut report = Report::new("states", inputs);
    report.tolerance("stationarity", STATIONARITY_TOL).tolerance("integrality", g.tol);
    let id = ComplexMatrix::identity(6);
    report
        .result("eta", form_value(&eta))
        .result("omega_self_dual", omega.is_self_dual())
        .result("eta_self_dual", eta.is_self_dual())
        .result("integral", complex_value(integrate(&sigma, &omega)))
        .result("f_of_identity", complex_value(state_functional(&sigma, &omega, &id)?));
    let all = args.check == StatesCheck::All;

    if all || args.check == StatesCheck::Stationarity {
        let gen = torus_generator();
        let mut rng = ChaCha8Rng::seed_from_u64(g.seed);
        let mut flows = Vec::new();
        for &eps in &args.epsilon {
            for sign in [1, -1] {
                flows.push((eps, sign, perturbed_star(&gen, eps, sign)?));
            }
        }
        let mut hodge: f64 = 0.0;
        let mut perturbed = vec![0.0f64; flows.len()];
        for _ in 0..args.samples {
            let a = random_matrix(&mut rng, 6);
            hodge = hodge.max(stationarity_derivative(&sigma, &omega, &gen, &a)?);
            for (worst, (_, _, p)) in perturbed.iter_mut().zip(&flows) {
                *worst = worst.max(perturbed_stationarity(&sigma, &omega, p, &a)?);
            }
        }
        let hypothesis = omega.is_self_dual() && eta.is_self_dual();
        let per_flow: Vec<Value> = flows
            .iter()
            .zip(&perturbed)
            .map(|((eps, sign, _), d)| json!({ "epsilon": eps, "sign": sign, "max_derivative": d }))
            .collect();
        report
            .result("self_dual_hypothesis", hypothesis)
            .result("max_derivative", hodge)
            .result("perturbed", per_flow);
        if hypothesis {
            report.checks.below("max_derivative", hodge, STATIONARITY_TOL);
            for ((eps, sign, _), d) in flows.iter().zip(&perturbed) {
                report.checks.below(&format!("perturbed_{eps}_{sign}"), *d, STATIONARITY_TOL);
            }
        }
    }
    if all || args.check == StatesCheck::Homology {
        let pairing = homology_pairing(&sigma, &omega);
        let scaled = omega.scale(C64::new(0.0, -1.0 / (2.0 * PI)));
        let integral_form = scaled
            .coefficients
            .iter()
            .all(|z| (z.re - z.re.round()).abs() <= g.tol && z.im.abs() <= g.tol);
        let representation = match surface_state_representation(&sigma, &omega) {
            Ok(rep) => json!({ "trivial": rep.is_trivial(), "gamma": rep.gamma, "ideal_dim": rep.ideal_dim }),
            Err(e) => json!({ "error": e.to_string() }),
        };
        report
            .result("pairing", complex_value(pairing.value))
            .result("degenerate", pairing.degenerate)
            .result("integrality_residual", pairing.integrality_residual())
            .result("integral_form", integral_form)
            .result("representation", representation);
        if integral_form {
            report.checks.below("integrality_residual", pairing.integrality_residual(), g.tol);
        }
    }
    Ok(report)
}

pub fn constants() -> Report {
    let mut report = Report::new("constants", json!({}));
    report.tolerance("relative", CONSTANTS_REL_TOL);
    let ft = formal_temperature();
    let t_dev = (ft.temperature_kelvin / REFERENCE_TEMPERATURE - 1.0).abs();
    let p_dev = (ft.period_seconds / REFERENCE_PERIOD - 1.0).abs();
    let ratio = ft.temperature_kelvin / ft.planck_temperature;
    report
        .result("hbar", HBAR)
        .result("boltzmann", BOLTZMANN)
        .result("planck_time", PLANCK_TIME)
        .result("planck_temperature", ft.planck_temperature)
        .result("period_seconds", ft.period_seconds)
        .result("temperature_kelvin", ft.temperature_kelvin)
        .result("temperature_over_planck", ratio);
    report.checks.below("temperature_deviation", t_dev, CONSTANTS_REL_TOL);
    report.checks.below("period_deviation", p_dev, CONSTANTS_REL_TOL);
    report.checks.below("half_planck_temperature", (ratio - 0.5).abs(), 1e-12);
    report
}
