use std::fmt::Write as _;

use pardeg_core::cartan::{CartanType, RootSystem, RootVector};
use pardeg_core::degree::{self, DegreeReport};
use pardeg_core::weyl::{self, ParabolicDatum};
use serde::Serialize;

use crate::args::{DegreeArgs, Format, RootsArgs, TableArgs};
use crate::config;
use crate::error::CliError;
use crate::output::{self, JsonReport};

/// Largest number of rows `table` will produce.
pub const TABLE_ROW_GUARD: u64 = 256;

fn assert_reports(reports: &[DegreeReport]) -> Result<(), CliError> {
    for r in reports {
        let levi: Vec<usize> = r.levi.iter().map(|i| i + 1).collect();
        if r.discrepancy() {
            return Err(CliError::Assertion(format!(
                "{} levi={levi:?} l={}: rank T mod l = {} but delta = {}",
                r.cartan_type, r.l, r.rank_t_mod_l, r.delta
            )));
        }
        if !r.identity_ok {
            return Err(CliError::Assertion(format!(
                "{} levi={levi:?}: exponent identity h + N + n = delta + (n - s) fails",
                r.cartan_type
            )));
        }
    }
    Ok(())
}

pub fn degree(args: &DegreeArgs) -> Result<(), CliError> {
    let ty = config::cartan_type(&args.common.cartan_type)?;
    let levi = config::levi(&args.levi, ty.rank())?;
    let l = config::modulus(args.l)?;
    let convention = config::convention(&args.common.convention)?;
    let report = degree::degree_report(ty, &levi, l, convention, args.common.seed)?;
    let body = match args.format {
        Format::Json => output::json(&JsonReport::from(&report)),
        Format::Csv => output::csv(std::slice::from_ref(&report)),
        Format::Text => output::text(&report),
    };
    output::emit(&body, args.common.out.as_deref())?;
    assert_reports(std::slice::from_ref(&report))
}

pub fn table(args: &TableArgs) -> Result<(), CliError> {
    let ty = config::cartan_type(&args.common.cartan_type)?;
    let l = config::modulus(args.l)?;
    let convention = config::convention(&args.common.convention)?;
    let rows = 1u64 << ty.rank().min(63);
    if rows > TABLE_ROW_GUARD {
        return Err(CliError::Usage(format!(
            "{ty} has {rows} Levi subsets, more than the table guard {TABLE_ROW_GUARD}"
        )));
    }
    let reports = degree::sweep_table(ty, l, convention, args.common.seed)?;
    let body = match args.format {
        Format::Json => {
            let rows: Vec<JsonReport> = reports.iter().map(JsonReport::from).collect();
            output::json(&rows)
        }
        Format::Csv => output::csv(&reports),
        Format::Text => reports.iter().map(output::text).collect(),
    };
    output::emit(&body, args.common.out.as_deref())?;
    assert_reports(&reports)
}

#[derive(Serialize)]
struct RootsListing {
    family: String,
    rank: usize,
    levi: Vec<usize>,
    convention: String,
    word: Vec<usize>,
    levi_word: Vec<usize>,
    wbar_word: Vec<usize>,
    full: Vec<Vec<i64>>,
    levi_roots: Vec<Vec<i64>>,
    complement: Vec<Vec<i64>>,
    levi_inside: bool,
}

fn coords(roots: &[RootVector]) -> Vec<Vec<i64>> {
    roots.iter().map(|r| r.coords().to_vec()).collect()
}

fn show(roots: &[RootVector]) -> String {
    let parts: Vec<String> = roots.iter().map(ToString::to_string).collect();
    format!("({})", parts.join(", "))
}

pub fn roots(args: &RootsArgs) -> Result<(), CliError> {
    let ty: CartanType = config::cartan_type(&args.common.cartan_type)?;
    let levi = config::levi(&args.levi, ty.rank())?;
    let convention = config::convention(&args.common.convention)?;
    let rs = RootSystem::of_type(ty);
    let pd = ParabolicDatum::new(&rs, &levi, args.common.seed)?;
    let betas = weyl::beta_sequence(&pd, convention)?;
    let inside = betas.levi_inside(&pd);
    let body = match args.format {
        Format::Json | Format::Csv => output::json(&RootsListing {
            family: ty.family().letter().to_string(),
            rank: ty.rank(),
            levi: levi.iter().map(|i| i + 1).collect(),
            convention: convention.as_str().to_string(),
            word: pd.word().to_bourbaki(),
            levi_word: pd.levi_word().to_bourbaki(),
            wbar_word: pd.wbar_word().to_bourbaki(),
            full: coords(&betas.full),
            levi_roots: coords(&betas.levi),
            complement: coords(&betas.complement),
            levi_inside: inside,
        }),
        Format::Text => {
            let shown: Vec<usize> = levi.iter().map(|i| i + 1).collect();
            let mut s = String::new();
            let _ = writeln!(s, "type {ty}  levi {shown:?}  convention {convention}");
            let _ = writeln!(s, "word        {}", pd.word());
            let _ = writeln!(s, "wbar word   {}", pd.wbar_word());
            let _ = writeln!(s, "levi word   {}", pd.levi_word());
            let _ = writeln!(s, "full        {}", show(&betas.full));
            let _ = writeln!(s, "complement  {}", show(&betas.complement));
            let flag = if inside {
                ""
            } else {
                "  [outside the Levi positive roots]"
            };
            let _ = writeln!(s, "levi        {}{flag}", show(&betas.levi));
            s
        }
    };
    output::emit(&body, args.common.out.as_deref())
}
