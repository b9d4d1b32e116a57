//! Acceptance gate: one PASS/FAIL line per criterion, nonzero exit if any
//! criterion fails.

use std::collections::BTreeMap;
use std::time::Instant;

use alcove_kit::{
    build_root_system, enumerate, run_suite_on, svg_annotation, Bounds, ElementTable, Suite,
    VerificationReport,
};

const SEED: u64 = 2024;
const RANK2: [&str; 3] = ["A2", "B2", "G2"];
const ALL_TYPES: [&str; 6] = ["A2", "B2", "G2", "A3", "B3", "C3"];

struct Tables {
    cache: BTreeMap<&'static str, ElementTable>,
}

impl Tables {
    fn new() -> Self {
        let cache = ALL_TYPES
            .iter()
            .map(|&name| {
                let rs = build_root_system(name.parse().unwrap());
                let reach = Bounds::for_rank(rs.rank()).max_length;
                (name, enumerate(&rs, reach).expect("ball fits in budget"))
            })
            .collect();
        Tables { cache }
    }

    fn get(&self, name: &str) -> &ElementTable {
        &self.cache[name]
    }
}

/// Runs `suite` on each type and folds the reports into one verdict.
fn across(
    tables: &Tables,
    types: &[&str],
    suite: Suite,
    tweak: impl Fn(&mut Bounds, usize),
) -> (bool, String) {
    let mut ok = true;
    let mut parts = Vec::new();
    for &name in types {
        let table = tables.get(name);
        let mut bounds = Bounds::for_rank(table.root_system().rank());
        tweak(&mut bounds, table.root_system().rank());
        let report = run_suite_on(table, suite, &bounds, SEED).expect("suite runs");
        ok &= report.is_ok();
        parts.push(describe(&report));
    }
    (ok, parts.join("; "))
}

fn describe(r: &VerificationReport) -> String {
    let mut s = format!("{} {}/{}", r.root_type, r.passed, r.passed + r.failed);
    if let Some(c) = r.first_counterexample() {
        s += &format!(" [first failure: {c}]");
    }
    s
}

/// Keeps the verdict of `stated` and appends how the variant without the
/// `r⁺` term fared on the same checks.
fn with_variant(stated: (bool, String), variant: (bool, String)) -> (bool, String) {
    let (ok, detail) = stated;
    let verdict = if variant.0 { "all agree" } else { "also fails" };
    (
        ok,
        format!(
            "{detail}\n    without the r⁺ term ({verdict}): {}",
            variant.1
        ),
    )
}

fn criterion_8(tables: &Tables) -> (bool, String) {
    let (found, detail) = across(tables, &["B2"], Suite::Figure1, |_, _| ());
    let report =
        run_suite_on(tables.get("B2"), Suite::Figure1, &Bounds::for_rank(2), SEED).unwrap();
    let Some(word) = report.witness else {
        return (false, detail);
    };
    let word_arg = word
        .iter()
        .map(|i| i.to_string())
        .collect::<Vec<_>>()
        .join(",");
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = alcove_kit::cli::run(
        ["alcove-kit", "render", "--type", "B2", "--word", &word_arg],
        &mut out,
        &mut err,
    );
    let svg = String::from_utf8(out).unwrap_or_default();
    let annotation = svg_annotation(&svg);
    let rendered_ok =
        code == 0 && matches!(annotation, Some((l, m, t)) if t == l - 2 * m && l == 4 && t == -4);
    (
        found && rendered_ok,
        format!(
            "witness {word:?}; render exit {code}, annotation (ℓ, marked, ℓ_A) = {annotation:?}"
        ),
    )
}

fn criterion_9(tables: &Tables) -> (bool, String) {
    let (a_ok, a) = across(tables, &RANK2, Suite::ClosureA12, |b, _| b.window_delta = 4);
    let (n_ok, n) = across(tables, &RANK2, Suite::ClosureNsets, |b, _| b.max_length = 8);
    (
        a_ok && n_ok,
        format!("A₁,₂ (incl. singleton control): {a}; N(w): {n}"),
    )
}

fn main() {
    let start = Instant::now();
    let tables = Tables::new();
    let types = &ALL_TYPES[..];

    type Check<'a> = Box<dyn Fn() -> (bool, String) + 'a>;
    let criteria: Vec<(&str, Check)> = vec![
        (
            "length from Shi coefficients equals BFS depth",
            Box::new(|| across(&tables, types, Suite::LengthEq4, |_, _| ())),
        ),
        (
            "floor and split Shi algorithms agree",
            Box::new(|| across(&tables, types, Suite::ShiAgreement, |_, _| ())),
        ),
        (
            "k(w⁻¹,α) = -k(w, w̄α)",
            Box::new(|| across(&tables, types, Suite::Eq6, |_, _| ())),
        ),
        (
            "ℓ_A(w) = Σ k(w⁻¹,α) for A = (∅,∅)",
            Box::new(|| across(&tables, types, Suite::Prop21, |_, _| ())),
        ),
        (
            "ℓ_A₁,₂(x) = ℓ(x) + 2r⁻(x⁻¹) - 2r⁺(x⁻¹) for all subset pairs",
            Box::new(|| {
                with_variant(
                    across(&tables, types, Suite::Lemma25, |_, _| ()),
                    across(&tables, types, Suite::LemmaRminus, |_, _| ()),
                )
            }),
        ),
        (
            "ℓ_B(x) = ℓ(xy) - ℓ(y) + 2R⁻ - 2R⁺ for orthogonal pairs",
            Box::new(|| {
                let bounds = |b: &mut Bounds, rank: usize| {
                    (b.theorem_x, b.theorem_y) = if rank == 2 { (6, 4) } else { (4, 3) };
                };
                with_variant(
                    across(&tables, types, Suite::Theorem26, bounds),
                    across(&tables, types, Suite::TheoremRminus, bounds),
                )
            }),
        ),
        (
            "ℓ_A(xy) = ℓ_A(y) + ℓ_{y·A}(x), ℓ(x), ℓ(y) ≤ 4",
            Box::new(|| {
                across(&tables, types, Suite::Eq1TwistedCocycle, |b, _| {
                    b.pair_length = 4
                })
            }),
        ),
        (
            "B2 witness with ℓ = 4, ℓ_A = -4 and consistent rendering",
            Box::new(|| criterion_8(&tables)),
        ),
        (
            "closure evidence for A₁,₂ and N(w)",
            Box::new(|| criterion_9(&tables)),
        ),
        (
            "|N(w)| = ℓ(w) plus sampled t ∈ N(w) ⟺ ℓ(tw) < ℓ(w)",
            Box::new(|| {
                across(&tables, types, Suite::InversionCardinality, |b, _| {
                    b.samples = 1000
                })
            }),
        ),
    ];

    let mut failed = 0;
    for (i, (title, check)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let (ok, detail) = check();
        if !ok {
            failed += 1;
        }
        println!(
            "{} criterion {:>2}: {title} ({:.1}s)\n    {detail}",
            if ok { "PASS" } else { "FAIL" },
            i + 1,
            t.elapsed().as_secs_f64()
        );
    }
    println!(
        "acceptance: {} passed, {} failed in {:.1}s",
        criteria.len() - failed,
        failed,
        start.elapsed().as_secs_f64()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
