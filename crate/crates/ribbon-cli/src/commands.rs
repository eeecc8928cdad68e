//! The bodies of the subcommands.

use ribbon_tableaux::audit::{full_suite, square_balance, BoxBounds};
use ribbon_tableaux::enumeration::{
    check_cauchy, check_claims, check_commutation, parse_word, schensted_count, CauchyKind, Report,
};
use ribbon_tableaux::knuth_growth::{grow as knuth_grow, shrink as knuth_shrink, RibbonTableau};
use ribbon_tableaux::partition::{EdgeSeq, Partition};
use ribbon_tableaux::ribbon::{
    from_core_quotient, r_quotient, strip_check, CoreQuotient, Orientation,
};
use ribbon_tableaux::schensted::{
    chain_dspin, grow_schensted, shrink_schensted, ColoredPermutation, CorrTag, SchenstedGrowth,
};
use ribbon_tableaux::shape_data::{
    burge_edge_extract_r, burge_edge_insert_r, spin_asym_extract, spin_asym_insert,
    spin_sym_extract_shapes, spin_sym_insert_shapes, Base, BurgeTrace, ColorVector, Datum,
    SymAction, SymStep,
};
use serde::Deserialize;
use serde_json::{json, Value};

use crate::{
    ConvertArgs, DatumArgs, Failure, GrowArgs, OrientationArg, Outcome, ShrinkArgs, StripArgs,
    Suite, Target, VerifyArgs, Way,
};

fn parse<'a, T: Deserialize<'a>>(input: &'a str) -> Result<T, Failure> {
    Ok(serde_json::from_str(input)?)
}

fn malformed(msg: impl Into<String>) -> Failure {
    Failure::Malformed(msg.into())
}

fn to_value<T: serde::Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("library types serialise")
}

// convert

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ConvertInput {
    partition: Option<Partition>,
    edge: Option<EdgeSeq>,
    core: Option<Partition>,
    quotient: Option<Vec<Partition>>,
}

pub fn convert(args: &ConvertArgs, input: &str) -> Outcome {
    let inp: ConvertInput = parse(input)?;
    let lambda = match (inp.partition, inp.edge, inp.core, inp.quotient) {
        (Some(p), None, None, None) => p,
        (None, Some(e), None, None) => Partition::from_edge(&e)?,
        (None, None, Some(core), Some(quotient)) => {
            let r = quotient.len();
            from_core_quotient(&CoreQuotient { core, quotient, r })?
        }
        _ => {
            return Err(malformed(
                "give exactly one of partition, edge, or core with quotient",
            ))
        }
    };
    let out = match args.to {
        Target::Partition => json!({ "partition": lambda }),
        Target::Edge => {
            let lo = args.lo.unwrap_or(-(lambda.len() as i64) - 2);
            let hi = args.hi.unwrap_or(lambda.part(0) as i64 + 2);
            if lo > hi {
                return Err(malformed("the window needs lo <= hi"));
            }
            let e = lambda.edge();
            json!({
                "partition": lambda,
                "edge": e,
                "window": { "lo": lo, "hi": hi, "bits": e.bit_string(lo, hi) },
            })
        }
        Target::Quotient => {
            let r = args.r.ok_or_else(|| malformed("--to quotient needs --r"))?;
            if r == 0 {
                return Err(malformed("r must be positive"));
            }
            let cq = r_quotient(&lambda, r);
            json!({ "partition": lambda, "r": r, "core": cq.core, "quotient": cq.quotient })
        }
    };
    Ok((out, true))
}

// datum

#[derive(Deserialize)]
#[serde(untagged)]
enum Entry {
    Scalar(u64),
    Vector(ColorVector),
}

impl Entry {
    fn into_vector(self) -> ColorVector {
        match self {
            Entry::Scalar(x) => ColorVector::new(vec![x]),
            Entry::Vector(v) => v,
        }
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct InsertInput {
    lambda: Partition,
    mu: Partition,
    nu: Partition,
    a: Entry,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ExtractInput {
    mu: Partition,
    nu: Partition,
    kappa: Partition,
}

fn mark(b: bool) -> &'static str {
    if b {
        "#"
    } else {
        "."
    }
}

fn burge_table(t: &BurgeTrace) -> Vec<String> {
    t.rows
        .iter()
        .map(|r| {
            format!(
                "{:>4}  {}  {} {}  {}  {:<18} {}  {} {}",
                r.k,
                r.before,
                mark(r.mu_lambda),
                mark(r.nu_lambda),
                r.c,
                r.action,
                r.after,
                mark(r.kappa_mu),
                mark(r.kappa_nu)
            )
        })
        .collect()
}

fn burge_trace_value(t: &BurgeTrace) -> Value {
    json!({ "burge": t, "table": burge_table(t) })
}

fn sym_table(steps: &[SymStep]) -> Vec<String> {
    steps
        .iter()
        .map(|s| {
            let action = match s.action {
                SymAction::Skip => "skip".to_string(),
                SymAction::Ribbon { d } => format!("ribbon, a_{} {:+}", s.h, d),
            };
            format!(
                "{:>4}  h={}  {} {}  {:<14} a={:?}",
                s.i,
                s.h,
                mark(s.in_m),
                mark(s.in_n),
                action,
                s.a.0
            )
        })
        .collect()
}

fn balance_value(
    datum: Datum,
    l: &Partition,
    m: &Partition,
    n: &Partition,
    k: &Partition,
    a: &ColorVector,
) -> Value {
    json!({
        "balance": square_balance(datum, l, m, n, k),
        "twice_colour_weight": 2 * a.weight(),
    })
}

pub fn datum(args: &DatumArgs, input: &str) -> Outcome {
    let d = Datum::from_name(&args.name, args.r)?;
    if d.r() == 0 {
        return Err(malformed("r must be positive"));
    }
    let (lambda, mu, nu, kappa, a, trace) = match args.way {
        Way::Insert => {
            let inp: InsertInput = parse(input)?;
            let a = inp.a.into_vector();
            let (kappa, trace) = match (args.trace, d) {
                (
                    true,
                    Datum::BurgeEdge
                    | Datum::Factored {
                        base: Base::Burge, ..
                    },
                ) => {
                    let (k, t) = burge_edge_insert_r(&inp.lambda, &inp.mu, &inp.nu, &a, d.r())?;
                    (k, burge_trace_value(&t))
                }
                (true, Datum::SpinSym { r }) => {
                    let (k, cfg) = spin_sym_insert_shapes(&inp.lambda, &inp.mu, &inp.nu, &a, r)?;
                    (
                        k,
                        json!({ "steps": cfg.steps, "table": sym_table(&cfg.steps) }),
                    )
                }
                (true, Datum::SpinAsym { r }) => {
                    let out = spin_asym_insert(&inp.lambda, &inp.mu, &inp.nu, &a, r)?;
                    (out.kappa.clone(), to_value(&out))
                }
                _ => (d.insert(&inp.lambda, &inp.mu, &inp.nu, &a)?, Value::Null),
            };
            (inp.lambda, inp.mu, inp.nu, kappa, a, trace)
        }
        Way::Extract => {
            let inp: ExtractInput = parse(input)?;
            let (a, lambda, trace) = match (args.trace, d) {
                (
                    true,
                    Datum::BurgeEdge
                    | Datum::Factored {
                        base: Base::Burge, ..
                    },
                ) => {
                    let (a, l, t) = burge_edge_extract_r(&inp.mu, &inp.nu, &inp.kappa, d.r())?;
                    (a, l, burge_trace_value(&t))
                }
                (true, Datum::SpinSym { r }) => {
                    let (a, l, cfg) = spin_sym_extract_shapes(&inp.mu, &inp.nu, &inp.kappa, r)?;
                    (
                        a,
                        l,
                        json!({ "steps": cfg.steps, "table": sym_table(&cfg.steps) }),
                    )
                }
                (true, Datum::SpinAsym { r }) => {
                    let out = spin_asym_extract(&inp.mu, &inp.nu, &inp.kappa, r)?;
                    (out.a.clone(), out.lambda.clone(), to_value(&out))
                }
                _ => {
                    let (a, l) = d.extract(&inp.mu, &inp.nu, &inp.kappa)?;
                    (a, l, Value::Null)
                }
            };
            (lambda, inp.mu, inp.nu, inp.kappa, a, trace)
        }
    };
    let mut out = json!({
        "datum": d.name(),
        "r": d.r(),
        "lambda": lambda,
        "mu": mu,
        "nu": nu,
        "kappa": kappa,
        "a": a,
        "rank": a.rank(),
        "spin": balance_value(d, &lambda, &mu, &nu, &kappa, &a),
    });
    if args.trace {
        out["trace"] = trace;
    }
    Ok((out, true))
}

// grow and shrink

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct KnuthInput {
    matrix: Vec<Vec<Entry>>,
    #[serde(default)]
    core: Partition,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct SchenstedInput {
    permutation: Vec<usize>,
    colours: Option<Vec<usize>>,
    #[serde(default)]
    core: Partition,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct PairInput {
    p: Vec<Partition>,
    q: Vec<Partition>,
}

fn tag_of(name: &str, r: usize) -> Result<CorrTag, Failure> {
    let tag = CorrTag::from_name(name)?;
    if r == 0 || !tag.supports(r) {
        return Err(malformed(format!(
            "correspondence {name} does not support r = {r}"
        )));
    }
    Ok(tag)
}

fn tableau_value(t: &RibbonTableau) -> Value {
    json!({
        "chain": t.chain,
        "orientation": t.orientation,
        "weight": t.weight(),
        "dspin": t.dspin(),
    })
}

fn schensted_value(g: &SchenstedGrowth, r: usize) -> Result<Value, Failure> {
    let (p, q) = (g.p_chain(), g.q_chain());
    let sigma: Vec<usize> = g.matrix.points().iter().map(|pt| pt.col).collect();
    let colours: Vec<usize> = g.matrix.points().iter().map(|pt| pt.colour).collect();
    let mut out = json!({
        "tag": g.tag,
        "r": r,
        "core": g.core,
        "permutation": sigma,
        "colours": colours,
        "shapes": g.shapes,
        "p": p,
        "q": q,
        "p_dspin": chain_dspin(&p, r)?,
        "q_dspin": chain_dspin(&q, r)?,
        "colour_sum": g.matrix.colour_sum(),
    });
    if r == 1 {
        out["p_rows"] = to_value(&g.p_rows()?);
        out["q_rows"] = to_value(&g.q_rows()?);
    }
    Ok(out)
}

pub fn grow(args: &GrowArgs, input: &str) -> Outcome {
    if let Some(name) = &args.tag {
        let tag = tag_of(name, args.r)?;
        let inp: SchenstedInput = parse(input)?;
        let a = match &inp.colours {
            Some(c) => ColoredPermutation::with_colours(&inp.permutation, c, args.r)?,
            None => ColoredPermutation::from_permutation(&inp.permutation, args.r)?,
        };
        let g = grow_schensted(&a, tag, &inp.core)?;
        return Ok((schensted_value(&g, args.r)?, true));
    }
    let name = args
        .datum
        .as_deref()
        .expect("clap requires --datum or --tag");
    let d = Datum::from_name(name, args.r)?;
    let inp: KnuthInput = parse(input)?;
    let matrix: Vec<Vec<ColorVector>> = inp
        .matrix
        .into_iter()
        .map(|row| row.into_iter().map(Entry::into_vector).collect())
        .collect();
    let g = knuth_grow(&matrix, d, &inp.core)?;
    let out = json!({
        "datum": d.name(),
        "r": d.r(),
        "shapes": g.shapes,
        "p": tableau_value(&g.p()),
        "q": tableau_value(&g.q()),
        "colour_weight": g.colour_weight(),
    });
    Ok((out, true))
}

pub fn shrink(args: &ShrinkArgs, input: &str) -> Outcome {
    let inp: PairInput = parse(input)?;
    if let Some(name) = &args.tag {
        let tag = tag_of(name, args.r)?;
        let g = shrink_schensted(&inp.p, &inp.q, tag, args.r)?;
        return Ok((schensted_value(&g, args.r)?, true));
    }
    let name = args
        .datum
        .as_deref()
        .expect("clap requires --datum or --tag");
    let d = Datum::from_name(name, args.r)?;
    let p = RibbonTableau::new(d.r(), inp.p, Orientation::Horizontal)?;
    let q = RibbonTableau::new(d.r(), inp.q, d.q_orientation())?;
    let g = knuth_shrink(&p, &q, d)?;
    let out = json!({
        "datum": d.name(),
        "r": d.r(),
        "matrix": g.entries,
        "shapes": g.shapes,
        "colour_weight": g.colour_weight(),
    });
    Ok((out, true))
}

// strip

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct StripInput {
    lower: Partition,
    upper: Partition,
}

pub fn strip(args: &StripArgs, input: &str) -> Outcome {
    if args.r == 0 {
        return Err(malformed("r must be positive"));
    }
    let inp: StripInput = parse(input)?;
    let o = match args.orientation {
        OrientationArg::H => Orientation::Horizontal,
        OrientationArg::V => Orientation::Vertical,
    };
    match strip_check(&inp.lower, &inp.upper, args.r, o) {
        None => Ok((
            json!({ "ok": false, "strip": false, "lower": inp.lower, "upper": inp.upper }),
            false,
        )),
        Some(s) => {
            let out = json!({
                "ok": true,
                "strip": true,
                "lower": inp.lower,
                "upper": inp.upper,
                "orientation": o,
                "count": s.count(),
                "heads": s.heads(),
                "heights": s.original_heights(),
                "dspin": s.dspin(),
                "standardisation": s.standardise()?,
            });
            Ok((out, true))
        }
    }
}

// verify

fn core_arg(s: &str) -> Result<Partition, Failure> {
    let parts = s
        .split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<usize>()
                .map_err(|_| malformed(format!("bad part {t:?} in --core")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Partition::new(parts)?)
}

fn run_suite(args: &VerifyArgs) -> Result<Report, Failure> {
    let mut rep = Report::new();
    let core = core_arg(&args.core)?;
    match args.suite {
        Suite::Claims => {
            if let Some(w) = &args.w {
                let r = args.r.ok_or_else(|| malformed("claims need --r"))?;
                rep.extend(check_claims(&parse_word(w)?, r, args.bound)?);
            }
        }
        Suite::Cauchy => {
            if let Some(r) = args.r {
                rep.extend(check_cauchy(
                    CauchyKind::Plain,
                    r,
                    &core,
                    args.nx,
                    args.ny,
                    args.deg,
                )?);
            }
        }
        Suite::Qcauchy => {
            if let Some(r) = args.r {
                rep.extend(check_commutation(r, args.max_size, args.deg)?);
                rep.extend(check_cauchy(
                    CauchyKind::Spin,
                    r,
                    &core,
                    args.nx,
                    args.ny,
                    args.deg,
                )?);
            }
        }
        Suite::AsymCauchy => {
            if let Some(r) = args.r {
                rep.extend(check_cauchy(
                    CauchyKind::Asymmetric,
                    r,
                    &core,
                    args.nx,
                    args.ny,
                    args.deg,
                )?);
            }
        }
        Suite::SchenstedCount => {
            if let Some(r) = args.r {
                for n in 0..=args.n {
                    rep.extend(schensted_count(r, &core, n)?);
                }
            }
        }
        Suite::Properties => {
            if let Some(r) = args.r {
                rep.extend(full_suite(
                    r,
                    BoxBounds {
                        rows: args.rows,
                        cols: args.cols,
                        max_rank: args.max_rank,
                    },
                ));
            }
        }
    }
    Ok(rep)
}

pub fn verify(args: &VerifyArgs) -> Outcome {
    let rep = match args.jobs {
        Some(0) => return Err(malformed("--jobs must be positive")),
        Some(j) => rayon::ThreadPoolBuilder::new()
            .num_threads(j)
            .build()
            .map_err(|e| Failure::Rejected(format!("cannot start worker threads: {e}")))?
            .install(|| run_suite(args))?,
        None => run_suite(args)?,
    };
    let ok = rep.ok;
    Ok((to_value(&rep), ok))
}
