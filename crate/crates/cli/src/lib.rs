//! Library half of the `qappell` command: table builders, renderers and the
//! verification suites. `main.rs` only parses arguments and maps outcomes to
//! exit codes.

pub mod output;
pub mod verify;

use qappell::families::{bernoulli_numbers, euler_numbers, FamilyKind, FamilySpec};
use qappell::{parse_scalar, QContext, Result, Scalar};

pub use output::{Format, Item, OutputRecord};

/// Exit code for a failed identity check.
pub const EXIT_VERIFY_FAILED: i32 = 1;
/// Exit code for bad arguments or parameters.
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum NumberFamily {
    Bernoulli,
    Euler,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum PolyFamily {
    Bernoulli,
    Euler,
    Identity,
    Asc2,
}

impl PolyFamily {
    pub fn name(self) -> &'static str {
        match self {
            PolyFamily::Bernoulli => "bernoulli",
            PolyFamily::Euler => "euler",
            PolyFamily::Identity => "identity",
            PolyFamily::Asc2 => "asc2",
        }
    }
}

/// Parameters that only some families read.
#[derive(Debug, Clone, Default)]
pub struct FamilyParams {
    pub order: i64,
    pub a: Option<Scalar>,
    pub alpha: Option<Scalar>,
    pub beta: Option<Scalar>,
}

/// `value_parser` for `--q`.
pub fn parse_q(text: &str) -> std::result::Result<QContext, String> {
    QContext::parse(text).map_err(|e| e.to_string())
}

/// `value_parser` for rational flags.
pub fn parse_rational(text: &str) -> std::result::Result<Scalar, String> {
    parse_scalar(text).map_err(|e| e.to_string())
}

/// Numbers `c_0..c_n` of the given family and order.
pub fn numbers_record(family: NumberFamily, order: i64, ctx: &QContext, n: usize) -> OutputRecord {
    let (name, values) = match family {
        NumberFamily::Bernoulli => ("bernoulli", bernoulli_numbers(ctx, order, n)),
        NumberFamily::Euler => ("euler", euler_numbers(ctx, order, n)),
    };
    OutputRecord::from_values(ctx, name, order, &values)
}

/// Polynomials `f_0..f_n`. `order` is reported as 0 for families without one.
pub fn polys_record(
    family: PolyFamily,
    params: &FamilyParams,
    ctx: &QContext,
    n: usize,
) -> Result<OutputRecord> {
    let one = || Scalar::from_integer(1.into());
    let (kind, order) = match family {
        PolyFamily::Bernoulli => (
            FamilyKind::Bernoulli {
                order: params.order,
            },
            params.order,
        ),
        PolyFamily::Euler => (
            FamilyKind::Euler {
                order: params.order,
            },
            params.order,
        ),
        PolyFamily::Identity => (FamilyKind::Identity, 0),
        PolyFamily::Asc2 => match &params.a {
            Some(a) => (FamilyKind::Asc2 { a: a.clone() }, 0),
            None => (
                FamilyKind::Asc2General {
                    alpha: params.alpha.clone().unwrap_or_else(one),
                    beta: params.beta.clone().unwrap_or_else(one),
                },
                0,
            ),
        },
    };
    let seq = FamilySpec::new(kind, ctx.clone(), n)?.build()?;
    Ok(OutputRecord::from_polys(
        ctx,
        family.name(),
        order,
        &seq.polynomials(n)?,
    ))
}
