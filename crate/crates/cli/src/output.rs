use std::fmt::Write as _;
use std::io::Write;
use std::path::Path;

use pardeg_core::degree::DegreeReport;
use serde::Serialize;

use crate::error::CliError;

/// Column order shared by JSON objects and the CSV header.
pub const COLUMNS: [&str; 19] = [
    "family",
    "rank",
    "levi",
    "l",
    "good",
    "N",
    "h",
    "k",
    "len_w0",
    "len_w0_levi",
    "s",
    "rank_T_rational",
    "rank_T_mod_l",
    "delta",
    "degree_exponent",
    "deg_tau_exponent",
    "identity_ok",
    "convention",
    "word",
];

#[derive(Debug, Serialize)]
pub struct JsonReport {
    pub family: String,
    pub rank: usize,
    pub levi: Vec<usize>,
    pub l: u64,
    pub good: bool,
    #[serde(rename = "N")]
    pub num_positive: usize,
    pub h: usize,
    pub k: usize,
    pub len_w0: usize,
    pub len_w0_levi: usize,
    pub s: usize,
    #[serde(rename = "rank_T_rational")]
    pub rank_t_rational: usize,
    #[serde(rename = "rank_T_mod_l")]
    pub rank_t_mod_l: usize,
    pub delta: usize,
    pub degree_exponent: usize,
    pub deg_tau_exponent: usize,
    pub identity_ok: bool,
    pub convention: String,
    pub word: Vec<usize>,
}

impl From<&DegreeReport> for JsonReport {
    fn from(r: &DegreeReport) -> Self {
        JsonReport {
            family: r.cartan_type.family().letter().to_string(),
            rank: r.cartan_type.rank(),
            levi: r.levi.iter().map(|i| i + 1).collect(),
            l: r.l,
            good: r.good,
            num_positive: r.num_positive,
            h: r.h,
            k: r.k,
            len_w0: r.len_w0,
            len_w0_levi: r.len_w0_levi,
            s: r.s,
            rank_t_rational: r.rank_t_rational,
            rank_t_mod_l: r.rank_t_mod_l,
            delta: r.delta,
            degree_exponent: r.degree_exponent,
            deg_tau_exponent: r.deg_tau_exponent,
            identity_ok: r.identity_ok,
            convention: r.convention.as_str().to_string(),
            word: r.word.to_bourbaki(),
        }
    }
}

fn join(v: &[usize]) -> String {
    v.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn json<T: Serialize + ?Sized>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

/// Lists become space-separated index strings.
pub fn csv(reports: &[DegreeReport]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(COLUMNS).expect("in-memory write");
    for r in reports {
        let j = JsonReport::from(r);
        w.write_record([
            j.family,
            j.rank.to_string(),
            join(&j.levi),
            j.l.to_string(),
            j.good.to_string(),
            j.num_positive.to_string(),
            j.h.to_string(),
            j.k.to_string(),
            j.len_w0.to_string(),
            j.len_w0_levi.to_string(),
            j.s.to_string(),
            j.rank_t_rational.to_string(),
            j.rank_t_mod_l.to_string(),
            j.delta.to_string(),
            j.degree_exponent.to_string(),
            j.deg_tau_exponent.to_string(),
            j.identity_ok.to_string(),
            j.convention,
            join(&j.word),
        ])
        .expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
}

pub fn text(r: &DegreeReport) -> String {
    let levi: Vec<usize> = r.levi.iter().map(|i| i + 1).collect();
    let mut s = String::new();
    let _ = writeln!(
        s,
        "type {}  levi {levi:?}  l = {}  good: {}",
        r.cartan_type, r.l, r.good
    );
    let _ = writeln!(s, "  word of w0     {}  ({})", r.word, r.convention);
    let _ = writeln!(
        s,
        "  N = {}  h = {}  k = {}  n = {}",
        r.num_positive, r.h, r.k, r.n
    );
    let _ = writeln!(
        s,
        "  l(w0) = {}  l(w0_levi) = {}  rk(w0 - w0_levi) = {}",
        r.len_w0, r.len_w0_levi, r.s
    );
    let _ = writeln!(
        s,
        "  rank T: {} over Q, {} mod l ({})",
        r.rank_t_rational, r.rank_t_mod_l, r.rank_mode
    );
    let _ = writeln!(
        s,
        "  delta = {}  degree = {}^{} = {}",
        r.delta,
        r.l,
        r.degree_exponent,
        r.degree()
    );
    let _ = writeln!(
        s,
        "  deg tau = {}^{}  identity ok: {}",
        r.l, r.deg_tau_exponent, r.identity_ok
    );
    if r.discrepancy() {
        let _ = writeln!(
            s,
            "  DISCREPANCY: rank mod l differs from delta at a good l"
        );
    }
    s
}

pub fn emit(body: &str, out: Option<&Path>) -> Result<(), CliError> {
    match out {
        Some(path) => std::fs::write(path, body)?,
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(body.as_bytes())?;
            stdout.flush()?;
        }
    }
    Ok(())
}
