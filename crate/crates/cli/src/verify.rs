//! Identity suites behind `qappell verify`.

use std::fmt;

use qappell::families::{
    arbitrate, asc2_modified, asc2_sequence, bernoulli_base, bernoulli_polys, bernoulli_power_sum,
    euler_base, euler_polys, euler_power_sum, identity_family, RecurrenceForm, ADOPTED_FORM,
};
use qappell::ortho::{
    connection_sum_check, derived_tailed_recurrence_holds, orthogonal_appell_family,
    quasi_orthogonal_family, three_term_holds, QuasiSpec, ThreeTermSpec,
};
use qappell::series::{big_qexp, qbinomial_convolution, small_qexp};
use qappell::{
    first_type2_violation, AppellSeq, Derivative, Poly, QContext, Result, Scalar, TruncSeries,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const SAMPLE_SEED: u64 = 0x5eed_a991;

/// Parameters of the orthogonal base used by the `ortho` suite and the quasi
/// family: `B_0 = -2`, `C_1 = -1`, whose roots are `α = β = 1`.
const ORTHO_B0: i64 = -2;
const ORTHO_C1: i64 = -1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    Appell,
    Group,
    Power,
    Series,
    Operator,
    Ortho,
    All,
}

impl Suite {
    const EACH: [Suite; 6] = [
        Suite::Appell,
        Suite::Group,
        Suite::Power,
        Suite::Series,
        Suite::Operator,
        Suite::Ortho,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Appell => "appell",
            Suite::Group => "group",
            Suite::Power => "power",
            Suite::Series => "series",
            Suite::Operator => "operator",
            Suite::Ortho => "ortho",
            Suite::All => "all",
        }
    }
}

#[derive(Debug, Clone)]
pub struct VerifyConfig {
    pub ctx: QContext,
    /// Highest degree checked.
    pub n: usize,
    pub lambda: Scalar,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub suite: &'static str,
    pub name: String,
    /// `None` when the identity held everywhere.
    pub failure: Option<String>,
}

impl Check {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

#[derive(Debug, Clone, Default)]
pub struct Report {
    pub checks: Vec<Check>,
    pub notes: Vec<String>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| !c.passed())
    }

    fn push(&mut self, suite: &'static str, name: impl Into<String>, failure: Option<String>) {
        self.checks.push(Check {
            suite,
            name: name.into(),
            failure,
        });
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for check in &self.checks {
            match &check.failure {
                None => writeln!(f, "PASS [{}] {}", check.suite, check.name)?,
                Some(why) => writeln!(f, "FAIL [{}] {}: {}", check.suite, check.name, why)?,
            }
        }
        for note in &self.notes {
            writeln!(f, "note: {note}")?;
        }
        let failed = self.checks.iter().filter(|c| !c.passed()).count();
        write!(f, "{} checks, {} failed", self.checks.len(), failed)
    }
}

pub fn run(suite: Suite, cfg: &VerifyConfig) -> Report {
    let mut report = Report::default();
    let suites: &[Suite] = if suite == Suite::All {
        &Suite::EACH
    } else {
        std::slice::from_ref(&suite)
    };
    for s in suites {
        match s {
            Suite::Appell => appell_suite(cfg, &mut report),
            Suite::Group => group_suite(cfg, &mut report),
            Suite::Power => power_suite(cfg, &mut report),
            Suite::Series => series_suite(cfg, &mut report),
            Suite::Operator => operator_suite(cfg, &mut report),
            Suite::Ortho => ortho_suite(cfg, &mut report),
            Suite::All => unreachable!(),
        }
    }
    report
}

/// A fixed pseudo-random determining sequence with `a_0 = 1` and small
/// rational `a_k` for `k ≥ 1`.
pub fn sample_sequence(ctx: &QContext, order: usize) -> AppellSeq {
    let mut rng = ChaCha8Rng::seed_from_u64(SAMPLE_SEED);
    let mut coeffs = vec![Scalar::from_integer(1.into())];
    for _ in 0..order {
        let num: i64 = rng.gen_range(-9..=9);
        let den: i64 = rng.gen_range(1..=9);
        coeffs.push(Scalar::new(num.into(), den.into()));
    }
    AppellSeq::from_coeffs(ctx.clone(), coeffs)
        .expect("a_0 = 1")
        .with_name("sample")
}

/// The quasi-orthogonal set over the `B_0 = -2`, `C_1 = -1` base, read back as
/// a determining sequence.
pub fn quasi_sequence(ctx: &QContext, lambda: &Scalar, order: usize) -> Result<AppellSeq> {
    let spec = QuasiSpec::new(ctx.clone(), int(ORTHO_B0), int(ORTHO_C1), lambda.clone())?;
    let polys = quasi_orthogonal_family(&spec, order);
    Ok(AppellSeq::from_polynomials(ctx.clone(), &polys)?.with_name("quasi"))
}

/// Every family the suites range over, each truncated at `order`.
pub fn families(ctx: &QContext, lambda: &Scalar, order: usize) -> Result<Vec<AppellSeq>> {
    let one = int(1);
    Ok(vec![
        bernoulli_polys(ctx, 1, order),
        euler_polys(ctx, 1, order),
        bernoulli_polys(ctx, 2, order).with_name("bernoulli^(2)"),
        euler_polys(ctx, -1, order).with_name("euler^(-1)"),
        identity_family(ctx, order).with_name("identity"),
        asc2_sequence(ctx, &one, &one, order)?,
        quasi_sequence(ctx, lambda, order)?,
        sample_sequence(ctx, order),
    ])
}

fn int(v: i64) -> Scalar {
    Scalar::from_integer(v.into())
}

fn label(f: &AppellSeq) -> &str {
    f.name().unwrap_or("unnamed")
}

/// First index in `range` where `holds` is false or errors.
fn scan(
    range: impl IntoIterator<Item = usize>,
    mut holds: impl FnMut(usize) -> Result<bool>,
) -> Option<String> {
    for k in range {
        match holds(k) {
            Ok(true) => {}
            Ok(false) => return Some(format!("first failure at n = {k}")),
            Err(e) => return Some(format!("error at n = {k}: {e}")),
        }
    }
    None
}

fn once(holds: Result<bool>) -> Option<String> {
    match holds {
        Ok(true) => None,
        Ok(false) => Some("identity does not hold".to_string()),
        Err(e) => Some(e.to_string()),
    }
}

fn with_families(
    cfg: &VerifyConfig,
    report: &mut Report,
    suite: &'static str,
) -> Option<Vec<AppellSeq>> {
    match families(&cfg.ctx, &cfg.lambda, cfg.n) {
        Ok(fs) => Some(fs),
        Err(e) => {
            report.push(suite, "construct families", Some(e.to_string()));
            None
        }
    }
}

fn appell_suite(cfg: &VerifyConfig, report: &mut Report) {
    const S: &str = "appell";
    let Some(fams) = with_families(cfg, report, S) else {
        return;
    };
    let n = cfg.n;
    for f in &fams {
        let name = label(f);
        let explicit = f.polynomials(n);
        report.push(
            S,
            format!("{name}: D_q f_n = [n]_q f_(n-1)(qx)"),
            match &explicit {
                Ok(p) => {
                    first_type2_violation(&cfg.ctx, p).map(|k| format!("first failure at n = {k}"))
                }
                Err(e) => Some(e.to_string()),
            },
        );
        let genfun = f.genfun_polynomials(n);
        report.push(
            S,
            format!("{name}: explicit, operator and generating-function forms agree"),
            scan(0..=n, |k| {
                let e = &explicit.as_ref().map_err(Clone::clone)?[k];
                Ok(&f.operator_form_polynomial(k)? == e
                    && &genfun.as_ref().map_err(Clone::clone)?[k] == e)
            }),
        );
        report.push(
            S,
            format!("{name}: recursion formula"),
            scan(1..=n, |k| f.recursion_holds(k)),
        );
        report.push(
            S,
            format!("{name}: q-difference equation"),
            scan(1..=n, |k| f.q_difference_holds(k)),
        );
    }
}

fn group_suite(cfg: &VerifyConfig, report: &mut Report) {
    const S: &str = "group";
    let ctx = &cfg.ctx;
    let n = cfg.n;
    let members = [
        bernoulli_polys(ctx, 1, n),
        euler_polys(ctx, 1, n),
        sample_sequence(ctx, n),
    ];
    let identity = AppellSeq::identity(ctx.clone(), n);
    for f in &members {
        let name = label(f);
        report.push(
            S,
            format!("{name} * I = {name}"),
            once(f.star(&identity).map(|p| p.coeffs() == f.coeffs())),
        );
        report.push(
            S,
            format!("{name} * {name}^-1 = I"),
            once(
                f.inverse()
                    .and_then(|inv| f.star(&inv))
                    .map(|p| p.coeffs() == identity.coeffs()),
            ),
        );
    }
    for (i, f) in members.iter().enumerate() {
        for g in &members[i + 1..] {
            let (a, b) = (label(f), label(g));
            report.push(
                S,
                format!("{a} * {b} = {b} * {a}"),
                once(
                    f.star(g)
                        .and_then(|fg| Ok(fg.coeffs() == g.star(f)?.coeffs())),
                ),
            );
            report.push(
                S,
                format!("{a} * {b}: componentwise product matches determining functions"),
                match f.star(g) {
                    Ok(fg) => scan(0..=n, |k| Ok(f.star_component(g, k)? == fg.polynomial(k)?)),
                    Err(e) => Some(e.to_string()),
                },
            );
        }
    }
    let [f, g, h] = &members;
    report.push(
        S,
        "(bernoulli * euler) * sample = bernoulli * (euler * sample)",
        once((|| {
            Ok(f.star(g)?.star(h)?.coeffs() == f.star(&g.star(h)?)?.coeffs())
        })()),
    );
}

fn power_suite(cfg: &VerifyConfig, report: &mut Report) {
    const S: &str = "power";
    let Some(fams) = with_families(cfg, report, S) else {
        return;
    };
    let ctx = &cfg.ctx;
    let n = cfg.n;
    for f in &fams {
        report.push(
            S,
            format!("{}: x^n from the inverse determining function", label(f)),
            scan(0..=n, |k| {
                Ok(f.reconstruct_power(k)? == Poly::monomial(int(1), k))
            }),
        );
    }
    let special = [
        (
            "bernoulli",
            bernoulli_polys(ctx, 1, n),
            bernoulli_power_sum as fn(&QContext, &[Poly], usize) -> Poly,
        ),
        ("euler", euler_polys(ctx, 1, n), euler_power_sum),
    ];
    for (name, f, sum) in special {
        report.push(
            S,
            format!("{name}: specialized power representation agrees with the general one"),
            match f.polynomials(n) {
                Ok(polys) => scan(
                    0..=n,
                    |k| Ok(sum(ctx, &polys, k) == f.reconstruct_power(k)?),
                ),
                Err(e) => Some(e.to_string()),
            },
        );
    }
}

fn series_suite(cfg: &VerifyConfig, report: &mut Report) {
    const S: &str = "series";
    let ctx = &cfg.ctx;
    let order = cfg.n.max(20);
    let product = small_qexp(ctx, &int(1), order).mul(&big_qexp(ctx, &int(-1), order));
    report.push(
        S,
        format!("e_q(t) E_q(-t) = 1 mod t^{}", order + 1),
        once(product.map(|p| p == TruncSeries::one(order))),
    );
    let n = cfg.n;
    for (name, base) in [
        ("bernoulli", bernoulli_base(ctx, n)),
        ("euler", euler_base(ctx, n)),
    ] {
        report.push(
            S,
            format!("{name} base: reciprocal is an involution"),
            once(
                base.reciprocal()
                    .and_then(|r| r.reciprocal())
                    .map(|rr| rr == base),
            ),
        );
    }
    let a = bernoulli_polys(ctx, 1, n);
    let b = sample_sequence(ctx, n);
    report.push(
        S,
        "series product equals q-binomial convolution of exponential coefficients",
        once((|| {
            let via_series = a
                .determining_function()
                .mul(&b.determining_function())?
                .to_exponential(ctx);
            Ok(via_series == qbinomial_convolution(ctx, a.coeffs(), b.coeffs())?)
        })()),
    );
}

fn operator_suite(cfg: &VerifyConfig, report: &mut Report) {
    const S: &str = "operator";
    let ctx = &cfg.ctx;
    let n = cfg.n;
    let q_inv = ctx.pow(-1);
    report.push(
        S,
        "D_q^k x^m at x/q^k equals q^C(k,2) D_(1/q)^k x^m",
        scan(0..=n, |k| {
            let mut q_shift = Scalar::from_integer(1.into());
            for _ in 0..k {
                q_shift *= &q_inv;
            }
            Ok((0..=n).all(|m| {
                let xm = Poly::monomial(int(1), m);
                let lhs = xm
                    .q_derivative_power(ctx, k, Derivative::Forward)
                    .dilate(&q_shift);
                let rhs = xm
                    .q_derivative_power(ctx, k, Derivative::Inverse)
                    .scale(&ctx.pow_binom2(k));
                lhs == rhs
            }))
        }),
    );
    report.push(
        S,
        "D_(1/q) D_q = q D_q D_(1/q) on monomials",
        scan(0..=n, |m| {
            let xm = Poly::monomial(int(1), m);
            let lhs = xm.q_derivative(ctx).q_inverse_derivative(ctx);
            let rhs = xm
                .q_inverse_derivative(ctx)
                .q_derivative(ctx)
                .scale(ctx.q());
            Ok(lhs == rhs)
        }),
    );
}

fn ortho_suite(cfg: &VerifyConfig, report: &mut Report) {
    const S: &str = "ortho";
    let ctx = &cfg.ctx;
    let n = cfg.n;
    let (b0, c1) = (int(ORTHO_B0), int(ORTHO_C1));

    let verdict = arbitrate(ctx, &b0, &c1, n.max(2));
    report.push(
        S,
        "exactly one candidate recurrence is type II, and it is the adopted one",
        match verdict.winner() {
            Some(w) if w == ADOPTED_FORM => None,
            Some(w) => Some(format!("winner is {w:?}")),
            None => Some(format!("{} candidates passed", verdict.passing.len())),
        },
    );
    for (form, index) in &verdict.failing {
        report.notes.push(format!(
            "{form:?} [{}] leaves type II at n = {index}",
            form.label()
        ));
    }
    for form in &verdict.passing {
        report.notes.push(format!(
            "{form:?} [{}] is type II through n = {}",
            form.label(),
            n.max(2)
        ));
    }

    let spec = match ThreeTermSpec::new(ctx.clone(), b0.clone(), c1.clone()) {
        Ok(s) => s,
        Err(e) => {
            report.push(S, "orthogonal base", Some(e.to_string()));
            return;
        }
    };
    let p = orthogonal_appell_family(&spec, n);
    report.push(
        S,
        "orthogonal family equals asc2_modified(1, 1)",
        match (
            spec.asc2_parameters(),
            asc2_modified(ctx, &int(1), &int(1), n),
        ) {
            (Some(_), Ok(r)) => scan(0..=n, |k| Ok(p[k] == r[k])),
            (None, _) => Some("B_0, C_1 have no rational roots".to_string()),
            (_, Err(e)) => Some(e.to_string()),
        },
    );
    report.push(
        S,
        "three-term recurrence",
        scan(1..n, |k| Ok(three_term_holds(&p, &spec, k))),
    );
    report.push(
        S,
        "orthogonal family is type II",
        first_type2_violation(ctx, &p).map(|k| format!("first failure at n = {k}")),
    );

    let irrational = RecurrenceForm::ALL
        .iter()
        .filter(|form| {
            first_type2_violation(ctx, &form.generate(ctx, &int(1), &int(1), n.max(2))).is_none()
        })
        .count();
    report.push(
        S,
        "arbitration also singles out one form for B_0 = 1, C_1 = 1 (irrational roots)",
        (irrational != 1).then(|| format!("{irrational} candidates passed")),
    );

    let quasi = match QuasiSpec::new(ctx.clone(), b0, c1, cfg.lambda.clone()) {
        Ok(s) => s,
        Err(e) => {
            report.push(S, "quasi-orthogonal family", Some(e.to_string()));
            return;
        }
    };
    let qp = quasi_orthogonal_family(&quasi, n);
    report.push(
        S,
        "quasi-orthogonal family is type II",
        first_type2_violation(ctx, &qp).map(|k| format!("first failure at n = {k}")),
    );
    report.push(
        S,
        "connection sum recovers the orthogonal family from the quasi family",
        scan(0..=n, |k| {
            Ok(connection_sum_check(ctx, &qp, &p, &cfg.lambda, k))
        }),
    );
    report.push(
        S,
        "quasi family satisfies its tailed recurrence",
        scan(1..n, |k| {
            Ok(derived_tailed_recurrence_holds(&qp, &quasi, k))
        }),
    );
}
