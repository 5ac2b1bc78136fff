use std::fmt::Write as _;

use bouquet_core::catalog::{
    diagram_tr_kn, generate_table, render_csv, render_text, Catalog, CheckStatus, TypeFilter, VerifyBudget,
};
use bouquet_core::moves::{simplify, SearchBudget};
use bouquet_core::pretzel::{
    construct_pair, construct_with_kn, construct_with_tr, kn_formula, kn_oracle, tr_formula, tr_oracle, PairCase,
    DEFAULT_ORACLE_BUDGET,
};
use bouquet_core::resolution::{weighted_resolution_set_with, Classifier, WrsBudget, DEFAULT_WRS_BUDGET};
use bouquet_core::suite::{self, SuiteReport};
use bouquet_core::{Error, ExtNat, PretzelCode, PretzelState, Pseudodiagram, Verdict};
use serde_json::{json, Value};

use crate::args::{Cli, Command, Construct, Format, Global, PairFamily, Suite, TableType};
use crate::{Failure, Output};

type Res = Result<Output, Failure>;

const CHECK_FORMULA_CROSSINGS: u32 = 9;
const CHECK_MOVE_CROSSINGS: u32 = 7;
const CHECK_WRS_PRECROSSINGS: u32 = 10;

enum Input {
    Code(PretzelCode),
    State(PretzelState),
    Diagram(Pseudodiagram),
}

impl Input {
    fn parse(text: &str) -> Result<Input, Error> {
        let t = text.trim();
        if t.starts_with('(') {
            if t.contains(['+', '-', '?']) {
                PretzelState::parse(t).map(Input::State)
            } else {
                PretzelCode::parse(t).map(Input::Code)
            }
        } else {
            let body = std::fs::read_to_string(t).map_err(|e| Error::Io(format!("{t}: {e}")))?;
            Pseudodiagram::from_json(&body).map(Input::Diagram)
        }
    }

    fn diagram(&self) -> Pseudodiagram {
        match self {
            Input::Code(c) => c.diagram(),
            Input::State(s) => s.diagram(),
            Input::Diagram(d) => d.clone(),
        }
    }
}

fn input(text: &str) -> Result<Input, Failure> {
    Ok(Input::parse(text)?)
}

fn catalog(g: &Global) -> Result<Catalog, Failure> {
    match &g.catalog {
        Some(p) => Ok(Catalog::load(p)?),
        None => Ok(Catalog::builtin()),
    }
}

fn oracle_budget(g: &Global) -> u32 {
    g.max_precrossings.unwrap_or(DEFAULT_ORACLE_BUDGET)
}

fn check_size(g: &Global, d: &Pseudodiagram) -> Result<(), Failure> {
    match g.max_crossings {
        Some(limit) if d.double_point_count() > limit as usize => Err(Failure::Budget(format!(
            "diagram has {} double points, --max-crossings is {limit}",
            d.double_point_count()
        ))),
        _ => Ok(()),
    }
}

fn json_line(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json value serializes");
    s.push('\n');
    s
}

fn csv(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut out = header.join(",");
    out.push('\n');
    for r in rows {
        let cells: Vec<String> = r
            .iter()
            .map(|c| if c.contains([',', '"']) { format!("\"{}\"", c.replace('"', "\"\"")) } else { c.clone() })
            .collect();
        out.push_str(&cells.join(","));
        out.push('\n');
    }
    out
}

fn opt(v: Option<impl ToString>) -> String {
    v.map_or_else(|| "-".to_string(), |x| x.to_string())
}

pub fn dispatch(cli: &Cli) -> Res {
    let g = &cli.global;
    match &cli.command {
        Command::Validate { input } => validate(g, input),
        Command::Type { input } => bouquet_type(g, input),
        Command::Tr { input } => number(g, input, Number::Tr),
        Command::Kn { input } => number(g, input, Number::Kn),
        Command::Construct(c) => construct(g, c),
        Command::Wrs { input } => wrs(g, input),
        Command::Simplify { input } => simplify_cmd(g, input),
        Command::Table { bouquet_type } => table(g, *bouquet_type),
        Command::Check { suite, samples, seed } => check(g, *suite, *samples, *seed),
    }
}

fn validate(g: &Global, text: &str) -> Res {
    let (valid, problems, d) = match Input::parse(text) {
        Ok(i) => {
            let d = i.diagram();
            let r = d.validate();
            (r.is_valid(), r.violations.iter().map(|v| v.to_string()).collect(), Some(d))
        }
        Err(Error::InvalidDiagram(r)) => (false, r.violations.iter().map(|v| v.to_string()).collect(), None),
        Err(e @ (Error::InvalidCode { .. } | Error::Parse { .. })) => (false, vec![e.to_string()], None),
        Err(e) => return Err(e.into()),
    };
    let t = d.as_ref().filter(|_| valid).and_then(|d| d.bouquet_type().ok());
    let stdout = match g.format {
        Format::Json => json_line(&json!({
            "input": text,
            "valid": valid,
            "type": t.map(|t| t.to_string()),
            "precrossings": d.as_ref().map(|d| d.precrossing_count()),
            "crossings": d.as_ref().map(|d| d.crossing_count()),
            "violations": problems,
        })),
        Format::Csv => csv(
            &["input", "valid", "type", "violations"],
            &[vec![text.to_string(), valid.to_string(), opt(t), problems.join("; ")]],
        ),
        Format::Text if valid && g.quiet => "valid\n".to_string(),
        Format::Text if valid => {
            let d = d.as_ref().expect("valid input has a diagram");
            format!(
                "valid: type {}, {} precrossings, {} crossings\n",
                opt(t),
                d.precrossing_count(),
                d.crossing_count()
            )
        }
        Format::Text => {
            let mut s = String::from("invalid\n");
            for p in &problems {
                let _ = writeln!(s, "  {p}");
            }
            s
        }
    };
    Ok(Output { stdout, stderr: String::new(), code: if valid { 0 } else { 1 } })
}

fn bouquet_type(g: &Global, text: &str) -> Res {
    let i = input(text)?;
    let t = match &i {
        Input::Code(c) => c.classify_type(),
        other => other.diagram().bouquet_type()?,
    };
    let stdout = match g.format {
        Format::Json => json_line(&json!({ "input": text, "type": t.to_string() })),
        Format::Csv => csv(&["input", "type"], &[vec![text.to_string(), t.to_string()]]),
        Format::Text => format!("{t}\n"),
    };
    Ok(Output::ok(stdout))
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Number {
    Tr,
    Kn,
}

impl Number {
    fn name(self) -> &'static str {
        match self {
            Number::Tr => "tr",
            Number::Kn => "kn",
        }
    }
}

fn number(g: &Global, text: &str, which: Number) -> Res {
    let i = input(text)?;
    let budget = oracle_budget(g);
    let (formula, oracle) = match &i {
        Input::Code(c) => {
            let formula = match which {
                Number::Tr => ExtNat::Finite(tr_formula(c)),
                Number::Kn => kn_formula(c),
            };
            let oracle = if c.precrossings() <= budget {
                let r = match which {
                    Number::Tr => tr_oracle(c, budget),
                    Number::Kn => kn_oracle(c, budget),
                };
                Some(r?.value)
            } else {
                None
            };
            (Some(formula), oracle)
        }
        other => {
            let d = other.diagram();
            check_size(g, &d)?;
            let vb = VerifyBudget { oracle_precrossings: budget, ..VerifyBudget::default() };
            match diagram_tr_kn(&d, vb)? {
                Some((t, k)) => (None, Some(if which == Number::Tr { t } else { k })),
                None => return Err(Failure::Budget("a resolution could not be decided by move search".into())),
            }
        }
    };
    let value = oracle.or(formula).expect("one of formula and oracle is present");
    let mut out = Output::ok(match g.format {
        Format::Json => json_line(&json!({
            "input": text,
            which.name(): value,
            "formula": formula,
            "oracle": oracle,
        })),
        Format::Csv => csv(
            &["input", which.name(), "formula", "oracle"],
            &[vec![text.to_string(), value.to_string(), opt(formula), opt(oracle)]],
        ),
        Format::Text => format!("{value}\n"),
    });
    if let (Some(f), Some(o)) = (formula, oracle) {
        if f != o {
            out.stderr = format!("error: closed form gives {f}, exhaustive search gives {o}\n");
            out.code = 1;
        }
    }
    Ok(out)
}

fn construct(g: &Global, c: &Construct) -> Res {
    let (code, predicted_tr, predicted_kn) = match *c {
        Construct::Tr { t } => (construct_with_tr(t)?, Some(t), None),
        Construct::Kn { k } => (construct_with_kn(k)?, None, Some(k)),
        Construct::Pair { k, case, m, n, l } => {
            let case = match case {
                PairFamily::Single => PairCase::NoTallStacks { odd: false },
                PairFamily::SingleOdd => PairCase::NoTallStacks { odd: true },
                PairFamily::EvenStack => PairCase::EvenStack { m, n, l },
                PairFamily::FewOnes => PairCase::AllOddFewOnes { m, n, l },
                PairFamily::ManyOnes => PairCase::AllOddManyOnes { m, n, l },
            };
            let p = construct_pair(k, case)?;
            (p.code, Some(p.predicted_tr), Some(p.predicted_kn))
        }
    };
    let budget = oracle_budget(g);
    let tr_f = ExtNat::Finite(tr_formula(&code));
    let kn_f = kn_formula(&code);
    let (tr_o, kn_o) = if code.precrossings() <= budget {
        (Some(tr_oracle(&code, budget)?.value), Some(kn_oracle(&code, budget)?.value))
    } else {
        (None, None)
    };
    let mut problems = Vec::new();
    let mut compare = |what: &str, how: &str, want: Option<u32>, got: Option<ExtNat>| {
        if let (Some(w), Some(x)) = (want, got) {
            if ExtNat::Finite(w) != x {
                problems.push(format!("predicted {what} {w}, {how} gives {x}"));
            }
        }
    };
    compare("tr", "formula", predicted_tr, Some(tr_f));
    compare("tr", "oracle", predicted_tr, tr_o);
    compare("kn", "formula", predicted_kn, Some(kn_f));
    compare("kn", "oracle", predicted_kn, kn_o);
    let stdout = match g.format {
        Format::Json => json_line(&json!({
            "code": code.to_string(),
            "predicted_tr": predicted_tr,
            "predicted_kn": predicted_kn,
            "tr_formula": tr_f,
            "tr_oracle": tr_o,
            "kn_formula": kn_f,
            "kn_oracle": kn_o,
            "problems": problems,
        })),
        Format::Csv => csv(
            &["code", "predicted_tr", "predicted_kn", "tr_formula", "tr_oracle", "kn_formula", "kn_oracle"],
            &[vec![
                code.to_string(),
                opt(predicted_tr),
                opt(predicted_kn),
                tr_f.to_string(),
                opt(tr_o),
                kn_f.to_string(),
                opt(kn_o),
            ]],
        ),
        Format::Text if g.quiet => format!("{code}\n"),
        Format::Text => {
            format!("{code}\ntr: formula {tr_f}, oracle {}\nkn: formula {kn_f}, oracle {}\n", opt(tr_o), opt(kn_o))
        }
    };
    let mut out = Output::ok(stdout);
    if !problems.is_empty() {
        out.stderr = problems.iter().map(|p| format!("error: {p}\n")).collect();
        out.code = 1;
    }
    Ok(out)
}

fn wrs(g: &Global, text: &str) -> Res {
    let d = input(text)?.diagram();
    check_size(g, &d)?;
    let budget = WrsBudget {
        max_precrossings: g.max_precrossings.map_or(DEFAULT_WRS_BUDGET, |n| n as usize),
        ..WrsBudget::default()
    };
    let names = catalog(g)?;
    let mut classifier = Classifier::new(budget.classify_nodes);
    let set = weighted_resolution_set_with(&d, budget, &mut classifier)?;
    let report = set.report(|k| names.class_name(k));
    let stdout = match g.format {
        Format::Json => json_line(&serde_json::to_value(&report).expect("report serializes")),
        Format::Csv => csv(
            &["key", "count", "weight", "name"],
            &report
                .classes
                .iter()
                .map(|c| {
                    vec![c.key.clone(), c.count.to_string(), c.weight.to_string(), c.name.clone().unwrap_or_default()]
                })
                .collect::<Vec<_>>(),
        ),
        Format::Text => {
            let mut s = String::new();
            if !g.quiet {
                let _ = writeln!(s, "{} precrossings, {} classes", report.p, report.classes.len());
            }
            for c in &report.classes {
                let name = c.name.as_deref().map(|n| format!("  {n}")).unwrap_or_default();
                let _ = writeln!(s, "{:>8}  {}{name}", c.weight.to_string(), c.key);
            }
            s
        }
    };
    let mut out = Output::ok(stdout);
    if set.has_unknown() {
        out.stderr = "warning: some resolutions could not be classified within the search budget\n".into();
        out.code = 2;
    }
    Ok(out)
}

fn simplify_cmd(g: &Global, text: &str) -> Res {
    let d = input(text)?.diagram();
    check_size(g, &d)?;
    let s = simplify(&d, SearchBudget::default())?;
    let stdout = match g.format {
        Format::Json => json_line(&serde_json::to_value(&s).expect("simplification serializes")),
        Format::Csv => csv(
            &["step", "move"],
            &s.witness.iter().enumerate().map(|(i, m)| vec![(i + 1).to_string(), m.to_string()]).collect::<Vec<_>>(),
        ),
        Format::Text => {
            let mut out = format!("{}\n", s.verdict);
            if !g.quiet {
                for (i, m) in s.witness.iter().enumerate() {
                    let _ = writeln!(out, "{:>3}. {m}", i + 1);
                }
                let _ = writeln!(out, "visited {} diagrams", s.nodes);
            }
            out
        }
    };
    let mut out = Output::ok(stdout);
    if s.verdict == Verdict::Unknown {
        out.stderr = "warning: search ended without a decision\n".into();
        out.code = 2;
    }
    Ok(out)
}

fn table(g: &Global, t: TableType) -> Res {
    let c = catalog(g)?;
    let filter = match t {
        TableType::K => TypeFilter::K,
        TableType::L => TypeFilter::L,
        TableType::All => TypeFilter::All,
    };
    let budget = VerifyBudget { oracle_precrossings: oracle_budget(g), ..VerifyBudget::default() };
    let rows = generate_table(&c, filter, budget);
    let stdout = match g.format {
        Format::Json => json_line(&serde_json::to_value(&rows).expect("rows serialize")),
        Format::Csv => render_csv(&rows),
        Format::Text => render_text(&rows),
    };
    let code = if rows.iter().any(|r| r.status == CheckStatus::Mismatch || r.error.is_some()) {
        1
    } else if rows.iter().any(|r| r.status == CheckStatus::Incomplete) {
        2
    } else {
        0
    };
    Ok(Output { stdout, stderr: String::new(), code })
}

fn check(g: &Global, which: Suite, samples: usize, seed: u64) -> Res {
    let report = match which {
        Suite::Formulas => suite::formulas(g.max_crossings.unwrap_or(CHECK_FORMULA_CROSSINGS), oracle_budget(g)),
        Suite::Tables => {
            let budget = VerifyBudget { oracle_precrossings: oracle_budget(g), ..VerifyBudget::default() };
            suite::tables(&catalog(g)?, budget)
        }
        Suite::Wrs => {
            suite::wrs(samples, g.max_precrossings.unwrap_or(CHECK_WRS_PRECROSSINGS), seed, WrsBudget::default())
        }
        Suite::Moves => suite::moves(g.max_crossings.unwrap_or(CHECK_MOVE_CROSSINGS), SearchBudget::default()),
    };
    let stdout = render_suite(g, &report);
    let code = if report.failed() > 0 {
        1
    } else if report.indeterminate() > 0 {
        2
    } else {
        0
    };
    Ok(Output { stdout, stderr: String::new(), code })
}

fn render_suite(g: &Global, r: &SuiteReport) -> String {
    match g.format {
        Format::Json => json_line(&serde_json::to_value(r).expect("report serializes")),
        Format::Csv => csv(
            &["suite", "property", "passed", "failed", "indeterminate"],
            &r.properties
                .iter()
                .map(|p| {
                    vec![
                        r.suite.clone(),
                        p.name.clone(),
                        p.passed.to_string(),
                        p.failed.to_string(),
                        p.indeterminate.to_string(),
                    ]
                })
                .collect::<Vec<_>>(),
        ),
        Format::Text => {
            let mut s = String::new();
            for p in &r.properties {
                let mark = if p.failed > 0 {
                    "FAIL"
                } else if p.indeterminate > 0 {
                    "INDETERMINATE"
                } else {
                    "PASS"
                };
                let _ = writeln!(
                    s,
                    "{mark} {}: {} passed, {} failed, {} indeterminate",
                    p.name, p.passed, p.failed, p.indeterminate
                );
                if !g.quiet {
                    for f in &p.failures {
                        let _ = writeln!(s, "  failure: {f}");
                    }
                    for n in &p.notes {
                        let _ = writeln!(s, "  note: {n}");
                    }
                }
            }
            let _ = writeln!(s, "{}: {} failed, {} indeterminate", r.suite, r.failed(), r.indeterminate());
            s
        }
    }
}
