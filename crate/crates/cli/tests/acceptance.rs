//! Acceptance criteria. Runs without the libtest harness so that every verdict
//! line lands in the test log, passing or not.

use std::process::Command;
use std::thread;
use std::time::Instant;

use num_traits::{One, Signed, Zero};
use qappell::families::{
    arbitrate, asc2_modified, bernoulli_numbers, bernoulli_polys, bernoulli_power_sum,
    euler_numbers, euler_polys, euler_power_sum, identity_family, ADOPTED_FORM,
};
use qappell::ortho::{
    connection_sum, orthogonal_appell_family, quasi_transform, rational_roots, QuasiCoefficient,
    ThreeTermSpec,
};
use qappell::series::{big_qexp, small_qexp};
use qappell::{AppellSeq, Poly, QContext, Scalar, TruncSeries};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const TEST_Q: [(i64, i64); 4] = [(1, 2), (2, 1), (3, 5), (-1, 2)];

type Criterion = fn() -> Outcome;

struct Outcome {
    pass: bool,
    detail: String,
    notes: Vec<String>,
}

impl Outcome {
    fn new(failures: Vec<String>, passed: &str) -> Self {
        match failures.first() {
            None => Outcome {
                pass: true,
                detail: passed.to_string(),
                notes: Vec::new(),
            },
            Some(first) => Outcome {
                pass: false,
                detail: format!("{} failure(s), first: {first}", failures.len()),
                notes: Vec::new(),
            },
        }
    }

    fn note(mut self, line: impl Into<String>) -> Self {
        self.notes.push(line.into());
        self
    }
}

fn ratio(n: i64, d: i64) -> Scalar {
    Scalar::new(n.into(), d.into())
}

fn int(n: i64) -> Scalar {
    Scalar::from_integer(n.into())
}

fn ctx(n: i64, d: i64) -> QContext {
    QContext::from_ratio(n, d).unwrap()
}

fn contexts() -> Vec<QContext> {
    TEST_Q.iter().map(|&(n, d)| ctx(n, d)).collect()
}

fn power(base: &Scalar, e: i64) -> Scalar {
    let mut acc = Scalar::one();
    for _ in 0..e.unsigned_abs() {
        acc *= base;
    }
    if e < 0 {
        acc.recip()
    } else {
        acc
    }
}

fn binom2(n: usize) -> i64 {
    (n * n.saturating_sub(1) / 2) as i64
}

/// `(1 - q^n) / (1 - q)`.
fn q_number(q: &Scalar, n: usize) -> Scalar {
    (Scalar::one() - power(q, n as i64)) / (Scalar::one() - q)
}

/// `f(c x)`, coefficientwise.
fn at_multiple(f: &Poly, c: &Scalar) -> Poly {
    Poly::new(
        f.coeffs()
            .iter()
            .enumerate()
            .map(|(i, a)| a * power(c, i as i64))
            .collect(),
    )
}

/// `(f(x) - f(px)) / ((1 - p) x)`, by exact division of the numerator by `x`.
fn difference_quotient(f: &Poly, p: &Scalar) -> Poly {
    let numerator = f - &at_multiple(f, p);
    assert!(numerator.coeff(0).is_zero());
    let scale = (Scalar::one() - p).recip();
    Poly::new(
        numerator
            .coeffs()
            .iter()
            .skip(1)
            .map(|a| a * &scale)
            .collect(),
    )
}

fn random_sequence(c: &QContext, order: usize, seed: u64) -> AppellSeq {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut coeffs = vec![int(1)];
    for _ in 0..order {
        coeffs.push(ratio(rng.gen_range(-9..=9), rng.gen_range(1..=9)));
    }
    AppellSeq::from_coeffs(c.clone(), coeffs)
        .unwrap()
        .with_name("random")
}

/// Orthogonal base `B_0 = -2`, `C_1 = -1` (roots `α = β = 1`).
fn base_spec(c: &QContext) -> ThreeTermSpec {
    ThreeTermSpec::new(c.clone(), int(-2), int(-1)).unwrap()
}

fn quasi_polys(
    c: &QContext,
    lambda: &Scalar,
    order: usize,
    coefficient: QuasiCoefficient,
) -> Vec<Poly> {
    let p = orthogonal_appell_family(&base_spec(c), order);
    quasi_transform(c, &p, lambda, coefficient)
}

fn families(c: &QContext, order: usize) -> Vec<(String, AppellSeq)> {
    let quasi = quasi_polys(c, &int(1), order, QuasiCoefficient::QNumber);
    let asc2 = asc2_modified(c, &int(1), &int(1), order).unwrap();
    vec![
        ("bernoulli".into(), bernoulli_polys(c, 1, order)),
        ("bernoulli^(2)".into(), bernoulli_polys(c, 2, order)),
        ("bernoulli^(-1)".into(), bernoulli_polys(c, -1, order)),
        ("euler".into(), euler_polys(c, 1, order)),
        ("euler^(3)".into(), euler_polys(c, 3, order)),
        ("identity".into(), identity_family(c, order)),
        (
            "asc2(1,1)".into(),
            AppellSeq::from_polynomials(c.clone(), &asc2).unwrap(),
        ),
        (
            "quasi(1)".into(),
            AppellSeq::from_polynomials(c.clone(), &quasi).unwrap(),
        ),
        ("random".into(), random_sequence(c, order, 7)),
    ]
}

fn first_type2_break(c: &QContext, polys: &[Poly]) -> Option<usize> {
    (1..polys.len()).find(|&n| {
        difference_quotient(&polys[n], c.q())
            != at_multiple(&polys[n - 1], c.q()).scale(&q_number(c.q(), n))
    })
}

fn criterion_1() -> Outcome {
    let mut failures = Vec::new();
    for c in contexts() {
        let mut sets: Vec<(String, Vec<Poly>)> = Vec::new();
        sets.push((
            "bernoulli".into(),
            bernoulli_polys(&c, 1, 15).polynomials(15).unwrap(),
        ));
        sets.push((
            "euler".into(),
            euler_polys(&c, 1, 15).polynomials(15).unwrap(),
        ));
        sets.push((
            "identity".into(),
            identity_family(&c, 15).polynomials(15).unwrap(),
        ));
        sets.push((
            "asc2(1,1)".into(),
            asc2_modified(&c, &int(1), &int(1), 15).unwrap(),
        ));
        sets.push((
            "quasi(1)".into(),
            quasi_polys(&c, &int(1), 15, QuasiCoefficient::QNumber),
        ));
        for (name, polys) in sets {
            if let Some(n) = first_type2_break(&c, &polys) {
                failures.push(format!("{name} at q = {}, n = {n}", c.q()));
            }
        }
    }
    let literal = quasi_polys(&ctx(1, 2), &int(1), 15, QuasiCoefficient::Factorial);
    let literal_break = first_type2_break(&ctx(1, 2), &literal);
    Outcome::new(failures, "5 families x 4 q values, n <= 15, exact").note(format!(
        "quasi transform with coefficient [n]_q!/lambda^n (lambda = 1, q = 1/2) first leaves type II at n = {}; \
         the coefficient [n]_q/lambda is the one that inverts the connection sum and is used",
        literal_break.map_or("none".to_string(), |n| n.to_string())
    ))
}

fn criterion_2() -> Outcome {
    let mut failures = Vec::new();
    for c in contexts() {
        for (name, f) in families(&c, 12) {
            let genfun = f.genfun_polynomials(12).unwrap();
            for (n, from_genfun) in genfun.iter().enumerate() {
                let explicit = f.polynomial(n).unwrap();
                if f.operator_form_polynomial(n).unwrap() != explicit || from_genfun != &explicit {
                    failures.push(format!("{name} at q = {}, n = {n}", c.q()));
                    break;
                }
            }
        }
    }
    Outcome::new(failures, "9 families x 4 q values, n <= 12")
}

fn criterion_3() -> Outcome {
    let mut failures = Vec::new();
    for c in [ctx(1, 2), ctx(3, 5), ctx(2, 1)] {
        for x in [int(1), ratio(7, 3)] {
            let product = small_qexp(&c, &x, 20)
                .mul(&big_qexp(&c, &-x.clone(), 20))
                .unwrap();
            if product != TruncSeries::one(20) {
                failures.push(format!("q = {}, x = {x}", c.q()));
            }
        }
    }
    Outcome::new(failures, "q in {1/2, 3/5, 2}, x in {1, 7/3}, through t^20")
}

fn criterion_4() -> Outcome {
    let mut failures = Vec::new();
    for c in contexts() {
        let members = [
            bernoulli_polys(&c, 1, 12),
            euler_polys(&c, 1, 12),
            random_sequence(&c, 12, 11),
        ];
        let identity = AppellSeq::identity(c.clone(), 12);
        let mut fail = |what: String| failures.push(format!("{what} at q = {}", c.q()));
        for (i, f) in members.iter().enumerate() {
            if f.star(&identity).unwrap().coeffs() != f.coeffs() {
                fail(format!("f{i} * I"));
            }
            if f.star(&f.inverse().unwrap()).unwrap().coeffs() != identity.coeffs() {
                fail(format!("f{i} * f{i}^-1"));
            }
            for (j, g) in members.iter().enumerate() {
                if f.star(g).unwrap().coeffs() != g.star(f).unwrap().coeffs() {
                    fail(format!("f{i} * f{j} commutativity"));
                }
                for (k, h) in members.iter().enumerate() {
                    let left = f.star(g).unwrap().star(h).unwrap();
                    let right = f.star(&g.star(h).unwrap()).unwrap();
                    if left.coeffs() != right.coeffs() {
                        fail(format!("(f{i} * f{j}) * f{k} associativity"));
                    }
                }
            }
        }
    }
    Outcome::new(failures, "bernoulli, euler, random at N = 12, 4 q values")
}

fn criterion_5() -> Outcome {
    let mut failures = Vec::new();
    for c in contexts() {
        let q = c.q();
        let bern = bernoulli_polys(&c, 1, 12);
        let eul = euler_polys(&c, 1, 12);
        let bern_inv = bern.inverse().unwrap();
        let eul_inv = eul.inverse().unwrap();
        for k in 0..=12 {
            if bern_inv.coeffs()[k] != power(q, binom2(k + 1)) / q_number(q, k + 1) {
                failures.push(format!("bernoulli b_{k} at q = {q}"));
            }
            let euler_b = if k == 0 {
                int(1)
            } else {
                power(q, binom2(k)) / int(2)
            };
            if eul_inv.coeffs()[k] != euler_b {
                failures.push(format!("euler b_{k} at q = {q}"));
            }
        }
        for (name, f) in families(&c, 12) {
            for n in 0..=12 {
                if f.reconstruct_power(n).unwrap() != Poly::monomial(int(1), n) {
                    failures.push(format!("{name} x^{n} at q = {q}"));
                }
            }
        }
        let bp = bern.polynomials(12).unwrap();
        let ep = eul.polynomials(12).unwrap();
        for n in 0..=12 {
            if bernoulli_power_sum(&c, &bp, n) != bern.reconstruct_power(n).unwrap() {
                failures.push(format!("bernoulli specialized x^{n} at q = {q}"));
            }
            if euler_power_sum(&c, &ep, n) != eul.reconstruct_power(n).unwrap() {
                failures.push(format!("euler specialized x^{n} at q = {q}"));
            }
        }
    }
    Outcome::new(
        failures,
        "general and specialized representations, n <= 12, 4 q values",
    )
}

fn criterion_6() -> Outcome {
    let mut failures = Vec::new();
    for c in contexts() {
        for (name, f) in families(&c, 12) {
            for n in 1..=12 {
                if !f.recursion_holds(n).unwrap() {
                    failures.push(format!("{name} recursion at q = {}, n = {n}", c.q()));
                }
                if !f.q_difference_holds(n).unwrap() {
                    failures.push(format!("{name} q-difference at q = {}, n = {n}", c.q()));
                }
            }
        }
    }
    let bern = bernoulli_polys(&ctx(1, 2), 1, 12);
    let weighted = (1..=12).find(|&n| !bern.weighted_q_difference_residual(n).unwrap().is_zero());
    Outcome::new(failures, "9 families x 4 q values, 1 <= n <= 12").note(format!(
        "q-difference equation with an extra q^C(k,2) on each alpha_k term (q-Bernoulli, q = 1/2) first fails at n = {}; \
         iterating the defining relation gives D_q^k f_n = q^C(k,2) [n]!/[n-k]! f_(n-k)(q^k x), which cancels that weight",
        weighted.map_or("none".to_string(), |n| n.to_string())
    ))
}

fn criterion_7() -> Outcome {
    let mut failures = Vec::new();
    for c in contexts() {
        let q = c.q();
        let q_inv = q.recip();
        for m in 0..=12 {
            let xm = Poly::monomial(int(1), m);
            let mut forward = xm.clone();
            let mut inverse = xm.clone();
            for n in 0..=12 {
                if n > 0 {
                    forward = difference_quotient(&forward, q);
                    inverse = difference_quotient(&inverse, &q_inv);
                }
                let lhs = at_multiple(&forward, &power(q, -(n as i64)));
                let rhs = inverse.scale(&power(q, binom2(n)));
                if lhs != rhs {
                    failures.push(format!("q = {q}, n = {n}, m = {m}"));
                }
                let library = xm.q_derivative_power(&c, n, qappell::Derivative::Forward);
                if library != forward {
                    failures.push(format!("library D_q^{n} x^{m} at q = {q}"));
                }
            }
        }
    }
    Outcome::new(failures, "n, m <= 12, 4 q values")
}

fn criterion_8() -> Outcome {
    let mut failures = Vec::new();
    let mut verdicts = Vec::new();
    let pairs = [
        (int(-2), int(-1)),
        (ratio(-5, 6), ratio(-1, 6)),
        (int(1), int(1)),
        (ratio(3, 2), int(2)),
    ];
    for c in contexts() {
        for (b0, c1) in &pairs {
            let verdict = arbitrate(&c, b0, c1, 12);
            match verdict.winner() {
                Some(w) if w == ADOPTED_FORM => {}
                _ => failures.push(format!(
                    "arbitration at q = {}, B_0 = {b0}, C_1 = {c1}: {verdict:?}",
                    c.q()
                )),
            }
            if c == ctx(1, 2) && b0 == &int(-2) {
                verdicts.push(verdict);
            }
            let winner = ADOPTED_FORM.generate(&c, b0, c1, 12);
            if let Some((alpha, beta)) = rational_roots(b0, c1) {
                if asc2_modified(&c, &alpha, &beta, 12).unwrap() != winner {
                    failures.push(format!("asc2_modified({alpha}, {beta}) at q = {}", c.q()));
                }
            }
        }
        let p = orthogonal_appell_family(&base_spec(&c), 12);
        for lambda in [int(1), ratio(2, 3), int(-3)] {
            let quasi = quasi_transform(&c, &p, &lambda, QuasiCoefficient::QNumber);
            let back: Vec<Poly> = (0..=12)
                .map(|n| connection_sum(&c, &quasi, &lambda, n))
                .collect();
            if back != p {
                failures.push(format!(
                    "connection sum of quasi, q = {}, lambda = {lambda}",
                    c.q()
                ));
            }
            if quasi_transform(&c, &back, &lambda, QuasiCoefficient::QNumber) != quasi {
                failures.push(format!(
                    "quasi of connection sum, q = {}, lambda = {lambda}",
                    c.q()
                ));
            }
        }
    }
    let c = ctx(1, 2);
    let p = orthogonal_appell_family(&base_spec(&c), 12);
    let literal = quasi_transform(&c, &p, &int(1), QuasiCoefficient::Factorial);
    let literal_break = (0..=12).find(|&n| connection_sum(&c, &literal, &int(1), n) != p[n]);
    let mut outcome = Outcome::new(
        failures,
        "4 (B_0, C_1) pairs x 4 q values; quasi round trip for lambda in {1, 2/3, -3}, n <= 12",
    );
    for verdict in verdicts {
        for form in &verdict.passing {
            outcome = outcome.note(format!(
                "arbitration verdict: {form:?} [{}] is type II (adopted)",
                form.label()
            ));
        }
        for (form, n) in &verdict.failing {
            outcome = outcome.note(format!(
                "arbitration verdict: {form:?} [{}] first leaves type II at n = {n}",
                form.label()
            ));
        }
    }
    outcome.note(format!(
        "quasi coefficient [n]_q!/lambda^n does not round-trip with the connection sum: first mismatch at n = {} \
         (lambda = 1, q = 1/2); [n]_q/lambda does",
        literal_break.map_or("none".to_string(), |n| n.to_string())
    ))
}

fn criterion_9() -> Outcome {
    let mut failures = Vec::new();
    let b = bernoulli_numbers(&ctx(999, 1000), 1, 3);
    let checks = [
        (
            "|B_1 + 1/2| <= 5e-4",
            (&b[1] + ratio(1, 2)).abs() <= ratio(5, 10_000),
        ),
        (
            "|B_2 - 1/6| <= 1e-2",
            (&b[2] - ratio(1, 6)).abs() <= ratio(1, 100),
        ),
        ("|B_3| <= 1e-2", b[3].abs() <= ratio(1, 100)),
    ];
    for (what, ok) in checks {
        if !ok {
            failures.push(format!("{what} at q = 999/1000"));
        }
    }
    for c in [
        ctx(1, 2),
        ctx(2, 1),
        ctx(3, 5),
        ctx(-1, 2),
        ctx(999, 1000),
        ctx(7, 3),
        ctx(-5, 1),
    ] {
        if euler_numbers(&c, 1, 1)[1] != ratio(-1, 2) {
            failures.push(format!("E_1 != -1/2 at q = {}", c.q()));
        }
    }
    let as_f64 = |v: &Scalar| {
        format!(
            "{:.6}",
            v.numer().to_string().parse::<f64>().unwrap()
                / v.denom().to_string().parse::<f64>().unwrap()
        )
    };
    Outcome::new(failures, "q = 999/1000 bounds; E_1 exact at 7 q values").note(format!(
        "at q = 999/1000: B_1 ~ {}, B_2 ~ {}, B_3 ~ {}",
        as_f64(&b[1]),
        as_f64(&b[2]),
        as_f64(&b[3])
    ))
}

fn criterion_10() -> Outcome {
    let bin = env!("CARGO_BIN_EXE_qappell");
    let mut failures = Vec::new();
    let verify = Command::new(bin)
        .args(["verify", "--suite", "all", "--q", "3/5", "--n", "12"])
        .output()
        .expect("run qappell verify");
    if verify.status.code() != Some(0) {
        failures.push(format!(
            "verify exited with {:?}: {}",
            verify.status.code(),
            String::from_utf8_lossy(&verify.stderr)
        ));
    }
    let run = || {
        Command::new(bin)
            .args(["polys", "--family", "bernoulli", "--q", "1/2", "--n", "5"])
            .output()
            .expect("run qappell polys")
    };
    let (first, second) = (run(), run());
    if !first.status.success() || first.stdout.is_empty() {
        failures.push("polys did not produce output".to_string());
    }
    if first.stdout != second.stdout {
        failures.push("polys JSON differs between runs".to_string());
    }
    Outcome::new(
        failures,
        "verify exit 0; polys JSON byte-identical across two runs",
    )
}

fn main() {
    let criteria: [(&str, Criterion); 10] = [
        ("type-II defining relation", criterion_1),
        (
            "explicit, operator and generating-function constructions agree",
            criterion_2,
        ),
        ("e_q(x) E_q(-x) = 1", criterion_3),
        ("star-product group axioms", criterion_4),
        ("power representations", criterion_5),
        ("recursion formula and q-difference equation", criterion_6),
        ("shift/derivative commutation on monomials", criterion_7),
        (
            "three-term arbitration, ASC-II match, quasi round trip",
            criterion_8,
        ),
        ("classical limit", criterion_9),
        ("CLI verify and byte-stable JSON", criterion_10),
    ];
    let started = Instant::now();
    let outcomes: Vec<Outcome> = thread::scope(|s| {
        let handles: Vec<_> = criteria.iter().map(|(_, run)| s.spawn(*run)).collect();
        handles
            .into_iter()
            .map(|h| {
                h.join().unwrap_or_else(|_| Outcome {
                    pass: false,
                    detail: "panicked".to_string(),
                    notes: Vec::new(),
                })
            })
            .collect()
    });
    let mut passed = 0;
    for (i, ((title, _), outcome)) in criteria.iter().zip(&outcomes).enumerate() {
        let verdict = if outcome.pass { "PASS" } else { "FAIL" };
        println!(
            "{verdict} criterion {}: {title} ({})",
            i + 1,
            outcome.detail
        );
        for note in &outcome.notes {
            println!("     note: {note}");
        }
        passed += usize::from(outcome.pass);
    }
    println!(
        "acceptance: {passed}/{} criteria passed in {:.1}s",
        criteria.len(),
        started.elapsed().as_secs_f64()
    );
    if passed != criteria.len() {
        std::process::exit(1);
    }
}
