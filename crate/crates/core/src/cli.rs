//! Command line front end. [`run`] returns the exit code and the text to
//! print, so it can be driven from tests.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use serde::Serialize;

use crate::classify::{
    classify_non_cm_quadratic_5, construct_general, family_member, glue_quadratic, is_ci,
    predicted_ideal, ConstructionParams, FamilyKind, FamilyParams,
};
use crate::error::{Error, Result};
use crate::koszul::{
    grobner_flag_search, growth_bound_violations, parse_var_ideal, poincare_coefficients,
    quadratic_gb_nonexistence, verify_koszul_filtration, FiltrationFamily, FiltrationTrace,
    HPolynomial, MarkingReport, DEFAULT_TRUNCATION,
};
use crate::poly::hilbert::{numerator_of_monomials, reduce_numerator};
use crate::poly::{normal_form, parse_polynomial, Ideal, MonomialOrder, OrderKind, Polynomial};
use crate::search::{
    analyze, analyze_all, analyze_and_persist, read_records, reference_records, table1_report,
    SweepSpec,
};
use crate::semigroup::{parse_generators, NumericalSemigroup};
use crate::tangent_cone::{hilbert_data, is_quadratic, TangentConeAnalysis};

#[derive(Parser, Debug)]
#[command(
    name = "quadcone",
    version,
    about = "Tangent cones of monomial curves: quadraticity, Cohen–Macaulayness and Koszulness"
)]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Full classification record of a semigroup.
    Analyze {
        generators: String,
        #[arg(long, default_value_t = DEFAULT_TRUNCATION)]
        truncation: usize,
        /// Also report membership, order and factorizations of this integer.
        #[arg(long)]
        element: Option<u64>,
        /// Apéry set with respect to this element instead of the multiplicity.
        #[arg(long)]
        apery: Option<u64>,
    },
    /// Minimal binomial generators of the toric ideal.
    Toric { generators: String },
    /// Defining ideal of the tangent cone.
    TangentCone { generators: String },
    /// Herzog–Garcia Cohen–Macaulay test with witness.
    Cm { generators: String },
    /// h-vector of the tangent cone.
    Hvector { generators: String },
    /// Match against the two non-CM families, or evaluate a parameter grid.
    Classify {
        generators: Option<String>,
        /// Grid bound `N` or `U,U',U''` for the family parameters.
        #[arg(long)]
        grid: Option<String>,
    },
    /// The construction in embedding dimension n+2.
    Construct {
        #[arg(long)]
        n: usize,
        /// Comma-separated u_1..u_n.
        #[arg(long)]
        u: String,
        /// Also compare with the computed toric ideal.
        #[arg(long)]
        check: bool,
    },
    /// Quadratic gluing <2L, ell>.
    Glue {
        generators: String,
        #[arg(long)]
        ell: u64,
    },
    /// Exhaustive sweep over semigroups with bounded generators.
    Search {
        #[arg(long, default_value_t = 5)]
        embdim: usize,
        #[arg(long, default_value_t = 1)]
        min_mult: u64,
        #[arg(long, default_value_t = 16)]
        max_mult: u64,
        /// Bound on the largest generator.
        #[arg(long, default_value_t = 60)]
        bound: u64,
        /// Analyze every semigroup, not only those passing the necessary
        /// conditions for quadraticity.
        #[arg(long)]
        all: bool,
        #[arg(long)]
        quadratic: bool,
        #[arg(long)]
        non_cm: bool,
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        /// Append records to this JSONL file, skipping keys already there.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_TRUNCATION)]
        truncation: usize,
    },
    /// Koszul tools on an ideal read from a file.
    Koszul {
        #[arg(long, required_unless_present = "hvector")]
        ideal: Option<PathBuf>,
        /// Test an h-vector alone: Poincaré negativity of 1/h(-t) and the
        /// growth bound.
        #[arg(long, conflicts_with = "ideal")]
        hvector: Option<String>,
        /// Number of variables (default: largest index in the file).
        #[arg(long)]
        nvars: Option<usize>,
        /// Candidate Koszul filtration, e.g. `0;(x2);(x2,x5);(x2,x3,x5);(x2,x4,x5);m`.
        #[arg(long)]
        family: Option<String>,
        #[arg(long, default_value_t = DEFAULT_TRUNCATION)]
        truncation: usize,
    },
    /// Gröbner bases, normal forms, colons and Hilbert series of an ideal.
    Ideal {
        /// Comma-separated generators in x1, x2, ...
        generators: String,
        #[arg(long)]
        nvars: Option<usize>,
        /// `grevlex`, `lex`, `local` (negative degree revlex) or weights `w1,...,wn`.
        #[arg(long, default_value = "grevlex")]
        order: String,
        /// Variable priority, largest first, e.g. `2,3,4,5,1`.
        #[arg(long)]
        priority: Option<String>,
        /// Remainder of a polynomial on division by the generators as given.
        #[arg(long)]
        reduce: Option<String>,
        /// S-polynomial of two polynomials separated by `;`.
        #[arg(long)]
        spoly: Option<String>,
        /// Colon ideal `I : f`.
        #[arg(long)]
        colon: Option<String>,
        /// Eliminate the first k variables.
        #[arg(long)]
        eliminate: Option<usize>,
        /// Hilbert series numerator of the initial ideal.
        #[arg(long)]
        hilbert: bool,
        /// Ideal of lowest-degree forms.
        #[arg(long)]
        initial_forms: bool,
    },
    /// h-vectors of quadratic embedding dimension five semigroups.
    Table1 {
        /// Read records from a sweep file.
        #[arg(long = "in")]
        input: Option<PathBuf>,
        /// Run the embedding dimension five sweep instead of the reference
        /// examples.
        #[arg(long)]
        sweep: bool,
        #[arg(long, default_value_t = 16)]
        max_mult: u64,
        #[arg(long, default_value_t = 60)]
        bound: u64,
        #[arg(long, default_value_t = 0)]
        jobs: usize,
    },
}

/// Parses `argv` (including the program name) and runs the command.
pub fn run<I, T>(argv: I) -> (i32, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            return (code, e.render().to_string());
        }
    };
    match dispatch(&cli) {
        Ok(out) => (0, out),
        Err(e) => (1, format!("error[{}]: {e}\n", e.name())),
    }
}

/// Any generating set is accepted and reduced to minimal generators.
fn semigroup(text: &str) -> Result<NumericalSemigroup> {
    NumericalSemigroup::minimal_generators(&parse_generators(text)?)
}

fn to_json<T: Serialize>(v: &T) -> Result<String> {
    serde_json::to_string_pretty(v)
        .map(|s| s + "\n")
        .map_err(|source| Error::Json {
            context: "serializing output".into(),
            source,
        })
}

fn lines(items: &[String]) -> String {
    items.iter().map(|s| format!("  {s}\n")).collect()
}

fn dispatch(cli: &Cli) -> Result<String> {
    let json = cli.json;
    match &cli.command {
        Command::Analyze {
            generators,
            truncation,
            element,
            apery,
        } => {
            let h = semigroup(generators)?;
            let r = analyze(&h, *truncation)?;
            if json {
                return to_json(&r);
            }
            let mut s = String::new();
            writeln!(s, "semigroup: <{}>", r.key).unwrap();
            writeln!(s, "multiplicity: {}", r.multiplicity).unwrap();
            writeln!(s, "embedding dimension: {}", r.embdim).unwrap();
            writeln!(s, "Frobenius number: {}", h.frobenius_number()).unwrap();
            let a = apery.unwrap_or(h.multiplicity());
            let mut ap = h.apery_set(a)?;
            ap.sort_unstable();
            writeln!(s, "Apéry set w.r.t. {a}: {}", join(&ap)).unwrap();
            let c: Vec<u64> = (1..=h.embdim()).map(|i| h.c_value(i)).collect();
            writeln!(s, "c_i: {}", join(&c)).unwrap();
            writeln!(
                s,
                "Hilbert function: {},...",
                join(&h.stable_hilbert_function())
            )
            .unwrap();
            writeln!(
                s,
                "necessary conditions for quadratic: {}",
                h.quadratic_necessary()
            )
            .unwrap();
            writeln!(s, "complete intersection: {}", is_ci(&h)).unwrap();
            if let Some(m) = element {
                if h.contains(*m) {
                    let f: Vec<String> = h
                        .factorizations(*m)
                        .iter()
                        .map(|f| format!("({})", join(&f.coefficients)))
                        .collect();
                    writeln!(
                        s,
                        "element {m}: in H, order {}, factorizations {}",
                        h.order(*m)?,
                        f.join(" ")
                    )
                    .unwrap();
                } else {
                    writeln!(s, "element {m}: not in H").unwrap();
                }
            }
            writeln!(s, "quadratic: {}", r.is_quadratic).unwrap();
            writeln!(s, "h-vector: {}", join(&r.h_vector)).unwrap();
            match &r.cm_witness {
                None => writeln!(s, "Cohen-Macaulay: true").unwrap(),
                Some(nu) => writeln!(s, "Cohen-Macaulay: false (witness nu={nu:?})").unwrap(),
            }
            writeln!(
                s,
                "quadratic GB (revlex): {}",
                r.qgb_order.as_deref().unwrap_or("none")
            )
            .unwrap();
            writeln!(
                s,
                "family: {}",
                r.family_match
                    .map(|f| f.to_string())
                    .unwrap_or_else(|| "none".into())
            )
            .unwrap();
            writeln!(s, "Koszul: {}", r.koszul_verdict).unwrap();
            Ok(s)
        }
        Command::Toric { generators } => {
            let a = TangentConeAnalysis::compute(&semigroup(generators)?)?;
            if json {
                return to_json(&a);
            }
            Ok(format!(
                "I_H of <{}>: {} generators\n{}",
                join(&a.generators),
                a.toric_ideal.len(),
                lines(&a.toric_ideal)
            ))
        }
        Command::TangentCone { generators } => {
            let h = semigroup(generators)?;
            let (a, istar) = TangentConeAnalysis::compute_with_ideal(&h)?;
            if json {
                return to_json(&a);
            }
            let n = istar.nvars();
            let mut s = format!(
                "I* of <{}>: {} generators\n{}",
                join(&a.generators),
                a.initial_forms.len(),
                lines(&a.initial_forms)
            );
            writeln!(s, "quadratic: {}", a.is_quadratic).unwrap();
            writeln!(s, "Cohen-Macaulay: {}", a.is_cm).unwrap();
            if !a.is_cm {
                let colon = istar.colon(&Polynomial::var(n - 1));
                let m = Ideal::variables(&(0..n).collect::<Vec<_>>(), n);
                let shown = if colon.same_ideal(&m) {
                    "m".to_string()
                } else {
                    colon.to_string()
                };
                writeln!(s, "I* : x{n} = {shown}").unwrap();
            }
            Ok(s)
        }
        Command::Cm { generators } => {
            let h = semigroup(generators)?;
            let cert = h.is_cm_tangent_cone();
            if json {
                return to_json(&analyze(&h, DEFAULT_TRUNCATION)?);
            }
            let mut s = format!("{cert}\n");
            if let (Some(nu), Some(v)) = (&cert.witness, cert.witness_value) {
                let nu_len: u32 = nu.iter().sum();
                let m1 = h.multiplicity();
                writeln!(
                    s,
                    "|nu| = {nu_len} > 1 + ord({v} - {m1}) = {}",
                    1 + h.order(v - m1)?
                )
                .unwrap();
            }
            Ok(s)
        }
        Command::Hvector { generators } => {
            let h = semigroup(generators)?;
            if json {
                return to_json(&analyze(&h, DEFAULT_TRUNCATION)?);
            }
            let (a, _) = TangentConeAnalysis::compute_with_ideal(&h)?;
            Ok(format!("{}\n", join(&a.h_vector)))
        }
        Command::Classify { generators, grid } => match (generators, grid) {
            (Some(g), None) => {
                let h = semigroup(g)?;
                if json {
                    return to_json(&analyze(&h, DEFAULT_TRUNCATION)?);
                }
                Ok(match classify_non_cm_quadratic_5(&h) {
                    Some(p) => format!("{p}\n"),
                    None => "none\n".to_string(),
                })
            }
            (None, Some(spec)) => classify_grid(spec, json),
            _ => Err(Error::InvalidParams(
                "classify takes either generators or --grid".into(),
            )),
        },
        Command::Construct { n, u, check } => {
            let p = ConstructionParams::new(*n, parse_generators(u)?)?;
            let c = construct_general(&p)?;
            let relations: Vec<String> = c
                .prefix_relations
                .iter()
                .chain(&c.f_relations)
                .map(|f| f.to_string())
                .collect();
            let matches = if *check {
                Some(
                    predicted_ideal(&c).same_ideal(&crate::tangent_cone::toric_ideal(&c.semigroup)),
                )
            } else {
                None
            };
            if json {
                #[derive(Serialize)]
                struct Out {
                    generators: Vec<u64>,
                    semigroup: Vec<u64>,
                    relations: Vec<String>,
                    matches_toric_ideal: Option<bool>,
                }
                return to_json(&Out {
                    generators: c.generators.clone(),
                    semigroup: c.semigroup.generators().to_vec(),
                    relations,
                    matches_toric_ideal: matches,
                });
            }
            let mut s = format!(
                "a_1..a_{}: {}\nsemigroup: {}\npredicted relations (x_k for a_k):\n{}",
                n + 2,
                join(&c.generators),
                c.semigroup,
                lines(&relations)
            );
            if let Some(m) = matches {
                writeln!(s, "equals toric ideal: {m}").unwrap();
            }
            Ok(s)
        }
        Command::Glue { generators, ell } => {
            let l = NumericalSemigroup::minimal_generators(&parse_generators(generators)?)?;
            let h = glue_quadratic(&l, *ell)?;
            if json {
                return to_json(&analyze(&h, DEFAULT_TRUNCATION)?);
            }
            Ok(format!("{h}\n"))
        }
        Command::Search {
            embdim,
            min_mult,
            max_mult,
            bound,
            all,
            quadratic,
            non_cm,
            jobs,
            out,
            truncation,
        } => {
            let mut spec = SweepSpec::new(*embdim, (*min_mult, *max_mult), *bound).with_jobs(*jobs);
            spec.require_necessary = !*all || *quadratic;
            spec.quadratic_only = *quadratic;
            spec.non_cm_only = *non_cm;
            spec.truncation = *truncation;
            match out {
                Some(path) => {
                    let summary = analyze_and_persist(&spec, path)?;
                    if json {
                        to_json(&summary)
                    } else {
                        Ok(format!("{summary}\n"))
                    }
                }
                None => {
                    let mut s = String::new();
                    for r in analyze_all(&spec)? {
                        let line = serde_json::to_string(&r).map_err(|source| Error::Json {
                            context: format!("record {}", r.key),
                            source,
                        })?;
                        writeln!(s, "{line}").unwrap();
                    }
                    Ok(s)
                }
            }
        }
        Command::Ideal {
            generators,
            nvars,
            order,
            priority,
            reduce,
            spoly,
            colon,
            eliminate,
            hilbert,
            initial_forms,
        } => {
            let i = Ideal::parse(generators, *nvars)?;
            let o = parse_order(order, priority.as_deref(), i.nvars())?;
            let poly = |t: &str| -> Result<Polynomial> { Ok(parse_polynomial(t)?.sorted(&o)) };
            let mut s = String::new();
            if let Some(f) = reduce {
                let gens: Vec<Polynomial> = i.gens().iter().map(|g| g.clone().sorted(&o)).collect();
                writeln!(s, "remainder: {}", normal_form(&poly(f)?, &gens, &o)).unwrap();
            } else if let Some(pair) = spoly {
                let (f, g) = pair.split_once(';').ok_or_else(|| {
                    Error::InvalidParams("--spoly takes two polynomials separated by ;".into())
                })?;
                writeln!(
                    s,
                    "S-polynomial: {}",
                    crate::poly::spoly(&poly(f)?, &poly(g)?, &o)
                )
                .unwrap();
            } else if let Some(f) = colon {
                writeln!(s, "I : ({f}) = {}", i.colon(&parse_polynomial(f)?)).unwrap();
            } else if let Some(k) = eliminate {
                writeln!(s, "{}", i.eliminate(*k)).unwrap();
            } else if *hilbert {
                let lms = i.leading_monomials(&o);
                let num = numerator_of_monomials(&lms);
                let (h, d) = reduce_numerator(&num, i.nvars());
                writeln!(s, "numerator over (1-t)^{}: {}", i.nvars(), join(&num)).unwrap();
                writeln!(s, "h-polynomial: {} over (1-t)^{d}", join(&h)).unwrap();
            } else if *initial_forms {
                writeln!(s, "{}", crate::tangent_cone::initial_forms_ideal(&i)).unwrap();
            } else {
                for g in i.basis(&o).iter() {
                    writeln!(s, "{g}").unwrap();
                }
            }
            Ok(s)
        }
        Command::Koszul {
            ideal,
            hvector,
            nvars,
            family,
            truncation,
        } => match (ideal, hvector) {
            (Some(path), _) => koszul_tools(path, *nvars, family.as_deref(), *truncation, json),
            (None, Some(hv)) => {
                let h = HPolynomial::new(parse_generators(hv)?)?;
                let negativity = crate::koszul::poincare_negativity(&h, *truncation);
                let growth = growth_bound_violations(&h);
                if json {
                    #[derive(Serialize)]
                    struct Out {
                        h_vector: Vec<u64>,
                        negativity: Option<(usize, String)>,
                        growth_violations: Vec<(usize, u64)>,
                    }
                    return to_json(&Out {
                        h_vector: h.coefficients().to_vec(),
                        negativity: negativity.map(|(i, c)| (i, c.to_string())),
                        growth_violations: growth,
                    });
                }
                let mut s = match negativity {
                    Some((i, c)) => format!("1/h(-t): coefficient {c} at t^{i}\n"),
                    None => format!("1/h(-t): nonnegative up to t^{truncation}\n"),
                };
                writeln!(s, "growth bound violations: {growth:?}").unwrap();
                Ok(s)
            }
            (None, None) => unreachable!("clap requires --ideal or --hvector"),
        },
        Command::Table1 {
            input,
            sweep,
            max_mult,
            bound,
            jobs,
        } => {
            let records = match (input, sweep) {
                (Some(p), _) => read_records(p)?,
                (None, true) => analyze_all(
                    &SweepSpec::new(5, (1, *max_mult), *bound)
                        .quadratic()
                        .with_jobs(*jobs),
                )?,
                (None, false) => reference_records(DEFAULT_TRUNCATION)?,
            };
            let report = table1_report(&records);
            if json {
                to_json(&report)
            } else {
                Ok(format!("{report}\n"))
            }
        }
    }
}

fn parse_order(kind: &str, priority: Option<&str>, n: usize) -> Result<MonomialOrder> {
    let kind = match kind {
        "grevlex" => OrderKind::GrevLex,
        "lex" => OrderKind::Lex,
        "local" => return Ok(MonomialOrder::neg_deg_revlex(n)),
        w => {
            let weights = parse_generators(w)
                .map_err(|_| Error::InvalidParams(format!("unknown order `{w}`")))?;
            if weights.len() != n {
                return Err(Error::InvalidParams(format!(
                    "expected {n} weights, got {}",
                    weights.len()
                )));
            }
            return Ok(MonomialOrder::weighted(weights));
        }
    };
    let Some(p) = priority else {
        return Ok(MonomialOrder::new(kind, n));
    };
    let p: Vec<usize> = parse_generators(p)?
        .iter()
        .map(|&v| v as usize - 1)
        .collect();
    let mut sorted = p.clone();
    sorted.sort_unstable();
    if sorted != (0..n).collect::<Vec<_>>() {
        return Err(Error::InvalidParams(format!(
            "priority must list x1..x{n} once each"
        )));
    }
    Ok(MonomialOrder::with_priority(kind, &p))
}

fn join<T: ToString>(v: &[T]) -> String {
    v.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

/// `N` bounds all three parameters; `U,U',U''` bounds each.
pub fn parse_grid(spec: &str) -> Result<[u64; 3]> {
    let v = parse_generators(spec)?;
    match v.as_slice() {
        [n] => Ok([*n; 3]),
        [a, b, c] => Ok([*a, *b, *c]),
        _ => Err(Error::InvalidParams(format!(
            "grid `{spec}` must be N or U,U',U''"
        ))),
    }
}

#[derive(Serialize)]
struct GridEntry {
    params: FamilyParams,
    generators: Option<Vec<u64>>,
    skipped: Option<String>,
    is_quadratic: Option<bool>,
    is_cm: Option<bool>,
    qgb_order: Option<String>,
}

fn classify_grid(spec: &str, json: bool) -> Result<String> {
    let [mu, mup, mupp] = parse_grid(spec)?;
    let mut entries = Vec::new();
    for kind in [FamilyKind::I, FamilyKind::II] {
        for u in 1..=mu {
            for up in (3..=mup).step_by(2) {
                for upp in 1..=mupp {
                    let p = FamilyParams::new(kind, u, up, upp)?;
                    entries.push(match family_member(&p) {
                        Ok(h) if h.embdim() == 5 => {
                            let a = TangentConeAnalysis::compute(&h)?;
                            GridEntry {
                                params: p,
                                generators: Some(a.generators.clone()),
                                skipped: None,
                                is_quadratic: Some(a.is_quadratic),
                                is_cm: Some(a.is_cm),
                                qgb_order: a.qgb_revlex.map(|q| q.order),
                            }
                        }
                        Ok(h) => GridEntry {
                            params: p,
                            generators: None,
                            skipped: Some(format!("embedding dimension {}", h.embdim())),
                            is_quadratic: None,
                            is_cm: None,
                            qgb_order: None,
                        },
                        Err(e) => GridEntry {
                            params: p,
                            generators: None,
                            skipped: Some(e.to_string()),
                            is_quadratic: None,
                            is_cm: None,
                            qgb_order: None,
                        },
                    });
                }
            }
        }
    }
    if json {
        return to_json(&entries);
    }
    let mut s = String::new();
    let mut bad = 0;
    for e in &entries {
        match &e.generators {
            Some(g) => {
                let ok =
                    e.is_quadratic == Some(true) && e.is_cm == Some(false) && e.qgb_order.is_some();
                bad += usize::from(!ok);
                writeln!(
                    s,
                    "{}: <{}> quadratic={} cm={} qgb={}",
                    e.params,
                    join(g),
                    e.is_quadratic.unwrap(),
                    e.is_cm.unwrap(),
                    e.qgb_order.as_deref().unwrap_or("none")
                )
                .unwrap();
            }
            None => writeln!(
                s,
                "{}: skipped ({})",
                e.params,
                e.skipped.as_deref().unwrap()
            )
            .unwrap(),
        }
    }
    writeln!(s, "members: {} counterexamples: {bad}", entries.len()).unwrap();
    Ok(s)
}

/// Everything the Koszul tools report about a hand-given ideal.
#[derive(Serialize)]
pub struct KoszulReport {
    pub ideal: String,
    pub active: Vec<usize>,
    pub quadratic: bool,
    pub h_polynomial: Vec<i64>,
    pub dimension: usize,
    /// First negative coefficient of the would-be Poincaré series.
    pub negativity: Option<(usize, String)>,
    pub growth_violations: Vec<(usize, u64)>,
    pub groebner_flag: Option<Vec<String>>,
    pub filtration: Option<(bool, FiltrationTrace)>,
    pub no_quadratic_gb: Option<bool>,
    pub markings: Vec<MarkingReport>,
}

fn koszul_tools(
    path: &PathBuf,
    nvars: Option<usize>,
    family: Option<&str>,
    truncation: usize,
    json: bool,
) -> Result<String> {
    let text = std::fs::read_to_string(path).map_err(|source| Error::Io {
        context: format!("reading {}", path.display()),
        source,
    })?;
    let body: String = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or(""))
        .collect::<Vec<_>>()
        .join(",");
    let body = body
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .collect::<Vec<_>>()
        .join(", ");
    let ideal = Ideal::parse(&body, nvars)?;
    let n = ideal.nvars();
    let used: BTreeSet<usize> = ideal
        .gens()
        .iter()
        .flat_map(|g| {
            g.terms()
                .iter()
                .flat_map(|(m, _)| (0..n).filter(|&i| m.exponent(i) > 0))
                .collect::<Vec<_>>()
        })
        .collect();
    let active: Vec<usize> = used.into_iter().collect();
    let inactive: Vec<usize> = (0..n).filter(|i| !active.contains(i)).collect();
    let restricted = inactive.iter().fold(ideal.clone(), |acc, &i| {
        acc.with_generator(Polynomial::var(i))
    });
    let (h, dim) = hilbert_data(&restricted);
    let quadratic = is_quadratic(&ideal);
    let hp = HPolynomial::from_signed(&h).ok();
    let negativity = hp.as_ref().and_then(|hp| {
        poincare_coefficients(hp, dim as u32, truncation)
            .into_iter()
            .enumerate()
            .find(|(_, c)| c < &num_bigint::BigInt::from(0))
            .map(|(i, c)| (i, c.to_string()))
    });
    let growth_violations = match (&hp, dim) {
        (Some(hp), 0) => growth_bound_violations(hp),
        _ => Vec::new(),
    };
    let groebner_flag = if quadratic && active.len() <= 6 {
        grobner_flag_search(&ideal, &active)
            .map(|f| f.iter().map(|v| format!("x{}", v + 1)).collect())
    } else {
        None
    };
    let filtration = match family {
        Some(spec) => {
            let fam = spec
                .split(';')
                .map(|s| parse_var_ideal(s, &active))
                .collect::<Result<Vec<_>>>()?;
            let f = FiltrationFamily::new(ideal.clone(), active.clone(), fam);
            Some(verify_koszul_filtration(&f))
        }
        None => None,
    };
    let (no_quadratic_gb, markings) = match quadratic_gb_nonexistence(&ideal) {
        Ok((none, reports)) => (Some(none), reports),
        Err(Error::NotQuadraticInput(_)) => (None, Vec::new()),
        Err(e) => return Err(e),
    };
    let report = KoszulReport {
        ideal: ideal.to_string(),
        active: active.iter().map(|v| v + 1).collect(),
        quadratic,
        h_polynomial: h,
        dimension: dim,
        negativity,
        growth_violations,
        groebner_flag,
        filtration,
        no_quadratic_gb,
        markings,
    };
    if json {
        return to_json(&report);
    }
    let mut s = String::new();
    writeln!(s, "ideal: {}", report.ideal).unwrap();
    writeln!(s, "quadratic: {}", report.quadratic).unwrap();
    writeln!(
        s,
        "h-polynomial: {} (dimension {})",
        join(&report.h_polynomial),
        report.dimension
    )
    .unwrap();
    match &report.negativity {
        Some((i, c)) => writeln!(s, "Poincare negativity: coefficient {c} at t^{i}").unwrap(),
        None => writeln!(s, "Poincare negativity: none up to t^{truncation}").unwrap(),
    }
    if !report.growth_violations.is_empty() {
        writeln!(s, "growth bound violated at {:?}", report.growth_violations).unwrap();
    }
    writeln!(
        s,
        "Groebner flag: {}",
        report
            .groebner_flag
            .as_ref()
            .map(|f| f.join(","))
            .unwrap_or_else(|| "none".into())
    )
    .unwrap();
    if let Some((ok, trace)) = &report.filtration {
        writeln!(s, "Koszul filtration: {ok}").unwrap();
        writeln!(s, "{trace}").unwrap();
    }
    match report.no_quadratic_gb {
        Some(none) => {
            writeln!(s, "no quadratic GB for any term order: {none}").unwrap();
            for m in &report.markings {
                writeln!(s, "{m}").unwrap();
            }
        }
        None => writeln!(s, "quadratic GB nonexistence: not applicable").unwrap(),
    }
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String) {
        run(std::iter::once("quadcone").chain(args.iter().copied()))
    }

    #[test]
    fn hvector_text() {
        assert_eq!(
            call(&["hvector", "16,17,18,20,24"]),
            (0, "1,4,6,4,1\n".to_string())
        );
    }

    #[test]
    fn analyze_json_record() {
        let (code, out) = call(&["analyze", "8,12,13,18,35", "--json"]);
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["is_quadratic"], true);
        assert_eq!(v["is_cm"], false);
        assert_eq!(v["h_vector"], serde_json::json!([1, 4, 2, 1]));
        assert_eq!(v["family_match"]["kind"], "I");
    }

    #[test]
    fn domain_and_usage_errors() {
        let (code, out) = call(&["analyze", "2,4"]);
        assert_eq!(code, 1);
        assert!(out.contains("GcdNotOne"), "{out}");
        let (code, out) = call(&["analyze", "8,12", "--bogus"]);
        assert_eq!(code, 2);
        assert!(out.contains("--bogus"), "{out}");
        assert_eq!(call(&[]).0, 2);
        assert_eq!(call(&["analyze", "8,x"]).0, 1);
    }

    #[test]
    fn cm_witness_and_cone() {
        let (code, out) = call(&["cm", "8,12,13,18,35"]);
        assert_eq!(code, 0);
        assert!(
            out.contains("nu=[0, 1, 1, 1, 0]") && out.contains("value=43"),
            "{out}"
        );
        let (_, out) = call(&["tangent-cone", "8,12,13,18,35"]);
        assert!(out.contains("I* : x5 = m"), "{out}");
    }

    #[test]
    fn construct_and_glue() {
        let (code, out) = call(&["construct", "--n", "3", "--u", "3,3,1", "--check"]);
        assert_eq!(code, 0, "{out}");
        assert!(out.contains("8,12,18,13,35") && out.contains("equals toric ideal: true"));
        assert_eq!(call(&["glue", "2,3", "--ell", "4"]).0, 1);
        assert_eq!(
            call(&["glue", "2,3", "--ell", "5"]),
            (0, "<4,5,6>\n".to_string())
        );
    }

    #[test]
    fn grid_spec() {
        assert_eq!(parse_grid("9").unwrap(), [9, 9, 9]);
        assert_eq!(parse_grid("3,5,2").unwrap(), [3, 5, 2]);
        assert!(parse_grid("3,5").is_err());
    }
}
