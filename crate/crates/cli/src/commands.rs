//! Subcommand dispatch.
//!
//! Exit codes: 0 when every requested check passes, 1 on a mathematical
//! failure, 2 on invalid input, 3 when a method cannot decide.

use std::path::PathBuf;
use std::time::Instant;

use fano212_core::action::{
    gfano_explanation, invariant_pencil, invariant_sublattice, is_gfano, picard_involution,
    projective_order, random_equivariant_model, DivisorClass, InvariantPencil, SwapActionSpec,
};
use fano212_core::chars::{
    characters_differ, curve_action_oracle, ij_characters, ij_oracle, jac_curve_characters,
    verdict_report, CharacterMultiset, Verdict,
};
use fano212_core::coh::{koszul_cohomology_on_x, koszul_euler_characteristic, koszul_shape, kunneth, CohTable};
use fano212_core::model::{
    determinantal_quartic, full_smoothness, full_smoothness_report, minor_cubics, quartic_smooth,
    rank_locus_check, ChartMethod, Side,
};
use fano212_core::polyalg::hilbert_polynomial;
use fano212_core::{Error, ErrorKind, QPoly};
use serde_json::{json, Value};

use crate::instance::{parse_instance, serialize_instance, InstanceFile};
use crate::report::{Report, EXPONENT_CONVENTION};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Command {
    Validate,
    Smooth,
    Gfano,
    Chars,
    Verify,
    Cohomology,
    Hilbert,
    Picard,
    Verdict,
    Random,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Validate => "validate",
            Command::Smooth => "smooth",
            Command::Gfano => "gfano",
            Command::Chars => "chars",
            Command::Verify => "verify",
            Command::Cohomology => "cohomology",
            Command::Hilbert => "hilbert",
            Command::Picard => "picard",
            Command::Verdict => "verdict",
            Command::Random => "random",
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Options {
    pub input: Option<PathBuf>,
    pub full: bool,
    pub oracle: bool,
    pub a: Option<i64>,
    pub b: Option<i64>,
    pub order: Option<u64>,
    pub weights: Option<Vec<i64>>,
    pub exponents: Option<Vec<i64>>,
    pub seed: Option<u64>,
    pub out: Option<PathBuf>,
}

/// What a subcommand produced besides its report.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Output {
    Report,
    /// `random` without `--out`: the instance text replaces the report.
    Instance(String),
}

/// A failure that ends the subcommand early.
struct Abort {
    code: u8,
    message: String,
}

impl From<Error> for Abort {
    fn from(e: Error) -> Self {
        let code = match e.kind() {
            ErrorKind::InvalidInput => 2,
            ErrorKind::MathFailure => 1,
            ErrorKind::Inconclusive => 3,
        };
        Abort { code, message: e.to_string() }
    }
}

fn invalid(message: impl Into<String>) -> Abort {
    Abort { code: 2, message: message.into() }
}

type Step<T> = std::result::Result<T, Abort>;

pub fn run(command: Command, options: &Options) -> (Report, Output) {
    let start = Instant::now();
    let mut report = Report::new(command.name());
    let mut output = Output::Report;
    let result = match command {
        Command::Validate => validate(&mut report, options),
        Command::Smooth => smooth(&mut report, options),
        Command::Gfano => gfano(&mut report, options),
        Command::Chars => chars(&mut report, options, options.oracle),
        Command::Verify => chars(&mut report, options, true),
        Command::Cohomology => cohomology(&mut report, options),
        Command::Hilbert => hilbert(&mut report, options),
        Command::Picard => picard(&mut report, options),
        Command::Verdict => verdict(&mut report, options),
        Command::Random => random(&mut report, options).map(|text| {
            if let Some(text) = text {
                output = Output::Instance(text);
            }
        }),
    };
    if let Err(abort) = result {
        report.insert("error", abort.message);
        report.fail(abort.code);
    }
    report.set_elapsed(start.elapsed());
    (report, output)
}

fn load(report: &mut Report, options: &Options) -> Step<InstanceFile> {
    let path = options.input.as_ref().ok_or_else(|| invalid("this subcommand needs --input FILE"))?;
    let text = std::fs::read_to_string(path).map_err(|e| invalid(format!("cannot read {}: {e}", path.display())))?;
    let inst = parse_instance(&text).map_err(|d| invalid(format!("{}: {d}", path.display())))?;
    report.insert("instance", instance_echo(&inst));
    Ok(inst)
}

fn exponents_json(order: u64, exps: &[i64]) -> Value {
    json!({ "order": order, "values": exps, "convention": EXPONENT_CONVENTION })
}

fn instance_echo(inst: &InstanceFile) -> Value {
    let spec = &inst.spec;
    let mut echo = json!({
        "conductor": inst.model.conductor(),
        "order": spec.order(),
        "swap": spec.is_swap(),
        "weights": exponents_json(spec.order(), &spec.weights()),
    });
    if let Some(second) = spec.second_weights() {
        echo["second_weights"] = exponents_json(spec.order(), &second);
    }
    if let Some(s) = inst.exponents {
        echo["declared_exponents"] = exponents_json(spec.order(), &s);
    }
    echo
}

fn multiset_json(c: &CharacterMultiset) -> Value {
    json!({ "exponents": c.exponents(), "text": c.to_string() })
}

fn sorted(mut s: [i64; 3]) -> [i64; 3] {
    s.sort_unstable();
    s
}

/// Computes the invariant pencil and checks it against declared exponents.
fn pencil(report: &mut Report, inst: &InstanceFile) -> Step<InvariantPencil> {
    let p = invariant_pencil(&inst.model, &inst.spec)?;
    report.insert("pencil_exponents", exponents_json(inst.spec.order(), &p.exponents));
    if let Some(declared) = inst.exponents {
        let agree = sorted(declared) == sorted(p.exponents);
        report.insert("declared_exponents_agree", agree);
        if !agree {
            report.fail(1);
        }
    }
    Ok(p)
}

fn validate(report: &mut Report, options: &Options) -> Step<()> {
    let inst = load(report, options)?;
    inst.model.validate()?;
    report.insert("form_rank", inst.model.form_rank());
    report.insert("projective_order", projective_order(&inst.spec));
    let p = pencil(report, &inst)?;
    let eigen = p.satisfies_eigen_relation(&inst.spec);
    report.insert("eigen_relation", eigen);
    if !eigen {
        report.fail(1);
    }
    Ok(())
}

fn smooth(report: &mut Report, options: &Options) -> Step<()> {
    let inst = load(report, options)?;
    let q = determinantal_quartic(&inst.model)?;
    let quartic = quartic_smooth(&q)?;
    let first = rank_locus_check(&inst.model, Side::First)?;
    let second = rank_locus_check(&inst.model, Side::Second)?;
    report.insert("quartic_smooth", quartic);
    report.insert("rank_locus", json!({ "first": first, "second": second }));
    if !(quartic && first && second) {
        report.fail(1);
    }
    if options.full {
        match full_smoothness(&inst.model) {
            Ok(smooth) => {
                report.insert("threefold_smooth", smooth);
                if smooth {
                    let charts: Vec<Value> = full_smoothness_report(&inst.model)
                        .into_iter()
                        .map(|c| {
                            let method = match c.method {
                                ChartMethod::Modular(p) => format!("unit ideal mod {p}"),
                                ChartMethod::Exact => "exact Groebner basis".into(),
                            };
                            json!({
                                "chart": [c.x_chart, c.y_chart],
                                "smooth": c.smooth.as_ref().ok(),
                                "method": method,
                            })
                        })
                        .collect();
                    report.insert("charts", charts);
                } else {
                    report.fail(1);
                }
            }
            Err(e) if e.kind() == ErrorKind::Inconclusive => {
                report.insert("threefold_smooth", Value::Null);
                report.insert("threefold_note", e.to_string());
                report.fail(3);
            }
            Err(e) => return Err(e.into()),
        }
    }
    Ok(())
}

fn picard_json(classes: &[DivisorClass]) -> Value {
    classes.iter().map(|c| c.to_string()).collect::<Vec<_>>().into()
}

fn gfano(report: &mut Report, options: &Options) -> Step<()> {
    let inst = load(report, options)?;
    report.insert("gfano", is_gfano(&inst.spec));
    report.insert("explanation", gfano_explanation(&inst.spec));
    report.insert("invariant_picard", picard_json(&invariant_sublattice(inst.spec.is_swap())));
    Ok(())
}

fn chars(report: &mut Report, options: &Options, oracle: bool) -> Step<()> {
    let inst = load(report, options)?;
    let spec = &inst.spec;
    let n = spec.order();
    let p = pencil(report, &inst)?;
    let s = p.exponents;
    let r = spec.all_weights();
    report.insert("r", exponents_json(n, &r));
    report.insert("s", exponents_json(n, &s));

    let jac = jac_curve_characters(s, &r, n)?;
    // without a swap the intermediate Jacobian carries the curve characters
    let ij = if spec.is_swap() { ij_characters(s, &r, n)? } else { jac.clone() };
    let mut formula = json!({ "jac": multiset_json(&jac), "ij": multiset_json(&ij) });
    if spec.is_swap() {
        let differ = characters_differ(&jac, &ij)?;
        formula["differ"] = differ.into();
        if !differ {
            report.fail(1);
        }
    }
    report.insert("formula", formula);
    report.insert("convention", EXPONENT_CONVENTION);
    if !oracle {
        return Ok(());
    }

    let jac_o = curve_action_oracle(&p, &r, n)?;
    let ij_o = ij_oracle(&p, &r, n, spec.is_swap())?;
    let jac_ok = jac_o == jac;
    let ij_ok = ij_o == ij;
    report.insert(
        "oracle",
        json!({
            "jac": multiset_json(&jac_o),
            "ij": multiset_json(&ij_o),
            "jac_agrees": jac_ok,
            "ij_agrees": ij_ok,
        }),
    );
    let agreement = jac_ok && ij_ok;
    report.insert("agreement", agreement);
    if !agreement {
        report.fail(1);
    }
    Ok(())
}

fn table_json(t: &CohTable) -> Value {
    json!({ "dims": t.dims(), "text": t.to_string() })
}

fn cohomology(report: &mut Report, options: &Options) -> Step<()> {
    let (Some(a), Some(b)) = (options.a, options.b) else {
        return Err(invalid("cohomology needs --a INT --b INT"));
    };
    report.insert("twist", json!([a, b]));
    let shape = koszul_shape(a, b);
    let terms: Vec<Value> = (0..=3).map(|k| table_json(shape.term(k))).collect();
    report.insert("koszul_terms", terms);
    report.insert("ambient", table_json(&kunneth(a, b)));
    report.insert("euler_characteristic", koszul_euler_characteristic(a, b));
    let table = koszul_cohomology_on_x(a, b)?;
    report.insert("table", table_json(&table));
    if table.euler_characteristic() != koszul_euler_characteristic(a, b) {
        report.fail(1);
    }
    Ok(())
}

fn hilbert(report: &mut Report, options: &Options) -> Step<()> {
    let inst = load(report, options)?;
    let expected = QPoly::from_ints(&[-2, 6]);
    report.insert("expected", expected.display_with("t"));
    for (key, side) in [("first", Side::First), ("second", Side::Second)] {
        let hp = hilbert_polynomial(&minor_cubics(&inst.model, side)?)?;
        let ok = hp == expected;
        report.insert(key, json!({ "polynomial": hp.display_with("t"), "matches": ok }));
        if !ok {
            report.fail(1);
        }
    }
    Ok(())
}

fn picard(report: &mut Report, options: &Options) -> Step<()> {
    let classes = [
        ("H", DivisorClass::H),
        ("E", DivisorClass::E),
        ("H'", DivisorClass::h_prime()),
        ("-K", DivisorClass::anticanonical()),
    ];
    let involution: serde_json::Map<String, Value> = classes
        .iter()
        .map(|(name, c)| (name.to_string(), picard_involution(*c).to_string().into()))
        .collect();
    report.insert("involution", Value::Object(involution));
    report.insert("invariant_swap", picard_json(&invariant_sublattice(true)));
    report.insert("invariant_diagonal", picard_json(&invariant_sublattice(false)));
    if options.input.is_some() {
        let inst = load(report, options)?;
        report.insert("invariant_picard", picard_json(&invariant_sublattice(inst.spec.is_swap())));
    }
    Ok(())
}

fn verdict(report: &mut Report, options: &Options) -> Step<()> {
    let inst = load(report, options)?;
    let s = if inst.spec.is_swap() { Some(pencil(report, &inst)?.exponents) } else { None };
    let v = verdict_report(&inst.spec, s)?;
    report.insert("gfano", is_gfano(&inst.spec));
    report.insert("verdict", v.verdict.to_string());
    report.insert("explanation", v.explanation);
    if let Some((jac, ij, differ)) = v.witness {
        report.insert(
            "witness",
            json!({ "jac": multiset_json(&jac), "ij": multiset_json(&ij), "differ": differ }),
        );
        report.insert("convention", EXPONENT_CONVENTION);
        if !differ {
            report.fail(1);
        }
    }
    if v.verdict == Verdict::NotLinearisable && !inst.spec.is_swap() {
        report.fail(1);
    }
    Ok(())
}

fn fixed<const K: usize>(name: &str, v: &Option<Vec<i64>>) -> Step<[i64; K]> {
    let v = v.as_ref().ok_or_else(|| invalid(format!("random needs --{name}")))?;
    v.clone()
        .try_into()
        .map_err(|v: Vec<i64>| invalid(format!("--{name} takes {K} values, found {}", v.len())))
}

fn random(report: &mut Report, options: &Options) -> Step<Option<String>> {
    let order = options.order.ok_or_else(|| invalid("random needs --order"))?;
    let weights: [i64; 4] = fixed("weights", &options.weights)?;
    let exponents: [i64; 3] = fixed("exponents", &options.exponents)?;
    let seed = options.seed.unwrap_or(0);
    let spec = SwapActionSpec::swap(order, weights)?;
    let model = random_equivariant_model(order, weights, exponents, seed)?;
    let exponents = exponents.map(|s| s.rem_euclid(order as i64));
    let text = serialize_instance(&InstanceFile { model, spec, exponents: Some(exponents) });
    match &options.out {
        None => Ok(Some(text)),
        Some(path) => {
            std::fs::write(path, &text).map_err(|e| invalid(format!("cannot write {}: {e}", path.display())))?;
            report.insert("out", path.display().to_string());
            report.insert("seed", seed);
            report.insert("s", exponents_json(order, &exponents));
            Ok(None)
        }
    }
}
