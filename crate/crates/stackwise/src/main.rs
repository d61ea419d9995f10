//! Command-line front end: poset documents in, deterministic reports out.
//!
//! Exit status: 0 when the requested check holds (or the command just
//! reports), 1 when a mathematical claim fails with a witness, 2 on
//! malformed input.

use clap::{Parser, Subcommand};
use serde_json::{json, Value};
use stackwise::basis::certify_standard;
use stackwise::basis::expand_word;
use stackwise::basis::stackwise_vector;
use stackwise::diagram::Color;
use stackwise::error::Error;
use stackwise::format::{parse_extension, parse_flag, parse_poset, render_extension};
use stackwise::identities::{verify_grid, IdentityStatus, VerifyMode};
use stackwise::lattice::raise_terms;
use stackwise::mvector::{act_word, gravity_cmp_ideals, MMultiset, MVector};
use stackwise::poset::{
    chain, figure31, rectangle, Axiom, ColoredPoset, Ideal, LinearExtension, PosetClass,
};
use stackwise::rep::{
    count_multichains, mu_table, seshadri_basis, verify_borel, verify_kacmoody, RelationReport,
};
use stackwise::words::{stackwise_word, Word};
use std::io::Read;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "stackwise",
    about = "Exact combinatorics of colored posets: axioms, split lattices, divided-power words, bases, and operator relations",
    version
)]
struct Cli {
    /// Poset document path ("-" for standard input, the default)
    #[arg(long, global = true, value_name = "FILE")]
    poset: Option<String>,

    /// Built-in poset: figure31, chain:N, or rectangle:KxL
    #[arg(long, global = true, value_name = "NAME", conflicts_with = "poset")]
    catalog: Option<String>,

    /// Linear extension like v<w<x<y<z (default: declaration order when
    /// valid, else the lexicographically least extension)
    #[arg(long, global = true, value_name = "ORDER")]
    ext: Option<String>,

    /// Structured output instead of plain text
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the coloring axioms, with witnesses for failures
    Check {
        /// Only this axiom: EC, ND, NA, AC, ICE2, UCB1, or LCB1
        #[arg(long)]
        axiom: Option<String>,
    },
    /// Report the poset class: minuscule, d-complete, ec-nd-only, or general
    Classify,
    /// Dump the split lattice, one labeled cover edge per line
    Lattice,
    /// List every linear extension
    Extensions,
    /// The stackwise word and vector of a flag
    Stackwise {
        /// Number of slots; must match the flag length when given
        #[arg(long)]
        m: Option<usize>,
        /// Flag as "I1;I2;...", outermost ideal first, 0 for the empty ideal
        #[arg(long)]
        flag: String,
    },
    /// Act by a word on the all-empty multiset and expand over the basis
    Expand {
        #[arg(long)]
        m: usize,
        /// Word in display order, e.g. "d,c,d,b,c,a" or "c^2,a^3"
        #[arg(long)]
        word: String,
    },
    /// Certify the standardness suite: triangular bases and integral expansions
    Certify {
        #[arg(long, value_name = "M")]
        m_max: usize,
        /// Repeat the suite for every linear extension
        #[arg(long)]
        all_extensions: bool,
        /// Random grouped words to expand per run
        #[arg(long, default_value_t = 100)]
        words: usize,
        #[arg(long, default_value_t = 2024)]
        seed: u64,
    },
    /// Verify the operator identities over a parameter grid
    VerifyIdentities {
        #[arg(long, default_value_t = 2)]
        pmax: u32,
        #[arg(long, default_value_t = 2)]
        qmax: u32,
        #[arg(long, default_value_t = 2)]
        rmax: u32,
        #[arg(long, default_value_t = 2)]
        m: usize,
        /// Sample this many starting tuples instead of exhausting them
        #[arg(long)]
        sample: Option<usize>,
        #[arg(long, default_value_t = 2024)]
        seed: u64,
    },
    /// Print the diagonal eigenvalue table, one row per split
    Mu,
    /// Verify the Lie operator relations against the poset class
    VerifyRep {
        /// Run even on lattices past the size guardrail
        #[arg(long)]
        force: bool,
    },
    /// Count multichains of ideals of the given length
    Count {
        #[arg(long)]
        m: usize,
    },
    /// The downward basis on the order dual, with weights
    Seshadri {
        #[arg(long)]
        m: usize,
    },
}

struct Outcome {
    text: String,
    json: Value,
    ok: bool,
}

impl Outcome {
    fn ok(text: String, json: Value) -> Outcome {
        Outcome {
            text,
            json,
            ok: true,
        }
    }
}

fn load_catalog(name: &str) -> Result<ColoredPoset, Error> {
    if name == "figure31" {
        return Ok(figure31());
    }
    if let Some(n) = name.strip_prefix("chain:") {
        let n = n
            .parse()
            .map_err(|_| Error::input(format!("bad chain length {n}")))?;
        return chain(n);
    }
    if let Some(kl) = name.strip_prefix("rectangle:") {
        let (k, l) = kl
            .split_once('x')
            .ok_or_else(|| Error::input("rectangle takes sides as KxL, e.g. rectangle:2x3"))?;
        let k = k
            .parse()
            .map_err(|_| Error::input(format!("bad side length {k}")))?;
        let l = l
            .parse()
            .map_err(|_| Error::input(format!("bad side length {l}")))?;
        return rectangle(k, l);
    }
    Err(Error::input(format!(
        "unknown catalog poset {name}; available: figure31, chain:N, rectangle:KxL"
    )))
}

fn load_poset(cli: &Cli) -> Result<ColoredPoset, Error> {
    if let Some(name) = &cli.catalog {
        return load_catalog(name);
    }
    let text = match cli.poset.as_deref() {
        Some(path) if path != "-" => std::fs::read_to_string(path)
            .map_err(|e| Error::input(format!("cannot read {path}: {e}")))?,
        _ => {
            let mut s = String::new();
            std::io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| Error::input(format!("cannot read standard input: {e}")))?;
            s
        }
    };
    parse_poset(&text)
}

fn gravity_ideals(p: &ColoredPoset, ext: &LinearExtension) -> Result<Vec<Ideal>, Error> {
    let mut ideals = p.enumerate_ideals()?;
    ideals.sort_by(|a, b| gravity_cmp_ideals(ext, a, b));
    Ok(ideals)
}

fn witness_names(p: &ColoredPoset, witness: &[stackwise::poset::Elem]) -> Vec<String> {
    witness.iter().map(|&e| p.name(e).to_string()).collect()
}

fn cmd_check(p: &ColoredPoset, axiom: Option<&str>) -> Result<Outcome, Error> {
    let axioms = match axiom {
        Some(name) => vec![Axiom::from_name(name).ok_or_else(|| {
            Error::input(format!(
                "unknown axiom {name}; one of EC, ND, NA, AC, ICE2, UCB1, LCB1"
            ))
        })?],
        None => Axiom::ALL.to_vec(),
    };
    let mut lines = Vec::new();
    let mut rows = Vec::new();
    let mut all_hold = true;
    for a in axioms {
        let report = p.check_axiom(a);
        all_hold &= report.holds;
        let names = witness_names(p, &report.witness);
        lines.push(if report.holds {
            format!("{}: holds", a.name())
        } else {
            format!("{}: FAILS (witness {})", a.name(), names.join(", "))
        });
        rows.push(json!({
            "axiom": a.name(),
            "holds": report.holds,
            "witness": names,
        }));
    }
    Ok(Outcome {
        text: lines.join("\n"),
        json: json!({ "axioms": rows, "all_hold": all_hold }),
        ok: all_hold,
    })
}

fn cmd_classify(p: &ColoredPoset) -> Outcome {
    let c = p.classify();
    let rows: Vec<Value> = c
        .reports
        .iter()
        .map(|r| {
            json!({
                "axiom": r.axiom.name(),
                "holds": r.holds,
                "witness": witness_names(p, &r.witness),
            })
        })
        .collect();
    Outcome::ok(
        c.class.name().to_string(),
        json!({ "class": c.class.name(), "axioms": rows }),
    )
}

fn cmd_lattice(p: &ColoredPoset, ext: &LinearExtension) -> Result<Outcome, Error> {
    let ideals = gravity_ideals(p, ext)?;
    let mut lines = vec![format!("{} splits", ideals.len())];
    let mut nodes = Vec::new();
    let mut edges = Vec::new();
    for &i in &ideals {
        nodes.push(p.ideal_name_with(ext, i));
        for c in 0..p.diagram().len() {
            let color = Color(c);
            for j in raise_terms(p, i, color) {
                lines.push(format!(
                    "{} -{}-> {}",
                    p.ideal_name_with(ext, i),
                    p.diagram().name(color),
                    p.ideal_name_with(ext, j)
                ));
                edges.push(json!({
                    "from": p.ideal_name_with(ext, i),
                    "color": p.diagram().name(color),
                    "to": p.ideal_name_with(ext, j),
                }));
            }
        }
    }
    Ok(Outcome::ok(
        lines.join("\n"),
        json!({ "splits": nodes, "edges": edges }),
    ))
}

fn cmd_extensions(p: &ColoredPoset) -> Outcome {
    let rendered: Vec<String> = p
        .linear_extensions()
        .map(|e| render_extension(p, &e))
        .collect();
    let mut lines = vec![format!("{} linear extensions", rendered.len())];
    lines.extend(rendered.iter().cloned());
    Outcome::ok(lines.join("\n"), json!({ "extensions": rendered }))
}

fn vector_terms_json(p: &ColoredPoset, ext: &LinearExtension, v: &MVector) -> Vec<Value> {
    v.sorted_terms(ext)
        .into_iter()
        .map(|(k, coeff)| {
            json!({
                "coefficient": coeff.to_string(),
                "multiset": stackwise::mvector::Slots::render(k, p, ext),
            })
        })
        .collect()
}

fn cmd_stackwise(
    p: &ColoredPoset,
    ext: &LinearExtension,
    m: Option<usize>,
    flag: &str,
) -> Result<Outcome, Error> {
    let flag = parse_flag(p, flag)?;
    if let Some(m) = m {
        if m != flag.m() {
            return Err(Error::input(format!(
                "--m {m} disagrees with the {}-component flag",
                flag.m()
            )));
        }
    }
    let word = stackwise_word(p, ext, &flag);
    let vector = stackwise_vector(p, ext, &flag);
    let text = format!(
        "flag: {}\nword: {}\nvector: {}",
        flag.render(p, ext),
        word.render(p),
        vector.render(p, ext)
    );
    let j = json!({
        "flag": flag.render(p, ext),
        "word": word.render(p),
        "vector": vector.render(p, ext),
        "terms": vector_terms_json(p, ext, &vector),
    });
    Ok(Outcome::ok(text, j))
}

fn cmd_expand(
    p: &ColoredPoset,
    ext: &LinearExtension,
    m: usize,
    word: &str,
) -> Result<Outcome, Error> {
    if m == 0 {
        return Err(Error::input("needs at least one slot"));
    }
    let word = Word::parse(p, word)?;
    let start = MVector::unit(MMultiset::empty(m));
    let vector = act_word(p, ext, &start, &word)?;
    let expansion = expand_word(p, ext, m, &word)?;
    let text = format!(
        "vector: {}\nexpansion:\n{}\nintegral: {}",
        vector.render(p, ext),
        expansion.render(p, ext),
        if expansion.integral { "yes" } else { "no" }
    );
    let terms: Vec<Value> = expansion
        .coefficients
        .iter()
        .map(|(flag, coeff)| {
            json!({
                "coefficient": coeff.to_string(),
                "flag": flag.render(p, ext),
            })
        })
        .collect();
    let j = json!({
        "vector": vector.render(p, ext),
        "terms": vector_terms_json(p, ext, &vector),
        "expansion": terms,
        "integral": expansion.integral,
    });
    Ok(Outcome::ok(text, j))
}

fn cmd_certify(
    p: &ColoredPoset,
    m_max: usize,
    all_extensions: bool,
    words: usize,
    seed: u64,
) -> Result<Outcome, Error> {
    let report = certify_standard(p, m_max, all_extensions, words, seed)?;
    let runs: Vec<Value> = report
        .runs
        .iter()
        .map(|r| {
            json!({
                "m": r.m,
                "extension": r.extension,
                "basis_size": r.basis_size,
                "words_expanded": r.words_expanded,
            })
        })
        .collect();
    let j = json!({
        "class": report.class.name(),
        "m_max": report.m_max,
        "extensions_checked": report.extensions_checked,
        "random_words": report.random_words,
        "seed": report.seed,
        "runs": runs,
        "failures": report.failures,
        "dependence": report.dependence.as_ref().map(|d| d.render(p)),
        "certified": report.certified(),
    });
    let ok = report.certified();
    Ok(Outcome {
        text: report.render(p),
        json: j,
        ok,
    })
}

#[allow(clippy::too_many_arguments)]
fn cmd_verify_identities(
    p: &ColoredPoset,
    ext: &LinearExtension,
    m: usize,
    pmax: u32,
    qmax: u32,
    rmax: u32,
    sample: Option<usize>,
    seed: u64,
) -> Result<Outcome, Error> {
    let mode = match sample {
        Some(tuples) => VerifyMode::Sample { tuples, seed },
        None => VerifyMode::Exhaustive,
    };
    let checks = verify_grid(p, ext, m, pmax, qmax, rmax, mode)?;
    let mut lines: Vec<String> = checks.iter().map(|c| c.render_line()).collect();
    let (mut holds, mut skipped, mut failed) = (0usize, 0usize, 0usize);
    let mut rows = Vec::new();
    for c in &checks {
        let status = match &c.status {
            IdentityStatus::Holds => {
                holds += 1;
                json!({ "kind": "holds" })
            }
            IdentityStatus::HypothesisFailed(why) => {
                skipped += 1;
                json!({ "kind": "hypothesis-failed", "reason": why })
            }
            IdentityStatus::Fails(ce) => {
                failed += 1;
                json!({
                    "kind": "fails",
                    "input": ce.input,
                    "lhs": ce.lhs,
                    "rhs": ce.rhs,
                })
            }
        };
        rows.push(json!({
            "tag": c.tag,
            "params": c.params,
            "cases": c.cases,
            "exhaustive": c.exhaustive,
            "status": status,
        }));
    }
    lines.push(format!(
        "{} checks: {holds} hold, {skipped} hypothesis-skipped, {failed} failed",
        checks.len()
    ));
    Ok(Outcome {
        text: lines.join("\n"),
        json: json!({
            "checks": rows,
            "holds": holds,
            "hypothesis_skipped": skipped,
            "failed": failed,
        }),
        ok: failed == 0,
    })
}

fn cmd_mu(p: &ColoredPoset, ext: &LinearExtension) -> Result<Outcome, Error> {
    let mu = mu_table(p)?;
    let mut ideals = mu.ideals().to_vec();
    ideals.sort_by(|a, b| gravity_cmp_ideals(ext, a, b));
    let mut lines = Vec::new();
    let mut rows = Vec::new();
    for &i in &ideals {
        let row = mu.row(i);
        let values: Vec<String> = row.iter().map(i64::to_string).collect();
        lines.push(format!(
            "{}: {}",
            p.ideal_name_with(ext, i),
            values.join(", ")
        ));
        rows.push(json!({
            "split": p.ideal_name_with(ext, i),
            "mu": row,
        }));
    }
    Ok(Outcome::ok(lines.join("\n"), json!({ "rows": rows })))
}

fn relation_lines(p: &ColoredPoset, reports: &[RelationReport]) -> (Vec<String>, Vec<Value>, bool) {
    let mut lines = Vec::new();
    let mut rows = Vec::new();
    let mut all_hold = true;
    let mut seen_tags = Vec::new();
    for r in reports {
        if !seen_tags.contains(&r.tag) {
            seen_tags.push(r.tag);
        }
        all_hold &= r.holds;
        rows.push(json!({
            "tag": r.tag.name(),
            "colors": r.colors.iter().map(|&c| p.diagram().name(c)).collect::<Vec<_>>(),
            "holds": r.holds,
            "witness": r.witness,
        }));
    }
    for tag in seen_tags {
        let of_tag: Vec<&RelationReport> = reports.iter().filter(|r| r.tag == tag).collect();
        let held = of_tag.iter().filter(|r| r.holds).count();
        lines.push(format!("  {}: {held}/{} hold", tag.name(), of_tag.len()));
        for r in of_tag.iter().filter(|r| !r.holds) {
            lines.push(format!("    {}", r.render(p)));
        }
    }
    (lines, rows, all_hold)
}

fn cmd_verify_rep(p: &ColoredPoset, force: bool) -> Result<Outcome, Error> {
    let class = p.classify().class;
    let mu = mu_table(p)?;
    let borel = verify_borel(p, &mu, force)?;
    let kacmoody = verify_kacmoody(p, &mu, force)?;

    let (borel_lines, borel_rows, borel_holds) = relation_lines(p, &borel);
    let (km_lines, km_rows, km_holds) = relation_lines(p, &kacmoody);

    let expect_borel = class >= PosetClass::DComplete;
    let expect_km = class == PosetClass::Minuscule;
    let consistent = borel_holds == expect_borel && km_holds == expect_km;

    let mut lines = vec![format!("class: {}", class.name())];
    lines.push("raising suite:".to_string());
    lines.extend(borel_lines);
    lines.push("full suite:".to_string());
    lines.extend(km_lines);
    lines.push(format!(
        "raising suite {} (class {} it); full suite {} (class {} it)",
        if borel_holds { "holds" } else { "fails" },
        if expect_borel { "requires" } else { "forbids" },
        if km_holds { "holds" } else { "fails" },
        if expect_km { "requires" } else { "forbids" },
    ));
    lines.push(format!(
        "consistent with class: {}",
        if consistent { "yes" } else { "NO" }
    ));
    let j = json!({
        "class": class.name(),
        "borel": { "reports": borel_rows, "all_hold": borel_holds },
        "kacmoody": { "reports": km_rows, "all_hold": km_holds },
        "consistent": consistent,
    });
    Ok(Outcome {
        text: lines.join("\n"),
        json: j,
        ok: consistent,
    })
}

fn cmd_count(p: &ColoredPoset, m: usize) -> Result<Outcome, Error> {
    let n = count_multichains(p, m)?;
    Ok(Outcome::ok(
        n.to_string(),
        json!({ "m": m, "count": n.to_string() }),
    ))
}

fn cmd_seshadri(p: &ColoredPoset, m: usize) -> Result<Outcome, Error> {
    let s = seshadri_basis(p, m)?;
    let mu = mu_table(p)?;
    let dual_ext = s.dual.default_extension();
    let mut lines = vec![format!("dimension: {}", s.dimension())];
    let mut rows = Vec::new();
    for entry in s.basis.entries() {
        let w = s.entry_weight(p, &mu, &entry.flag);
        lines.push(format!(
            "{}: weight {}",
            entry.flag.render(&s.dual, dual_ext),
            w.render()
        ));
        rows.push(json!({
            "flag": entry.flag.render(&s.dual, dual_ext),
            "weight": w.0,
        }));
    }
    Ok(Outcome::ok(
        lines.join("\n"),
        json!({ "m": m, "dimension": s.dimension(), "entries": rows }),
    ))
}

fn dispatch(cli: &Cli) -> Result<Outcome, Error> {
    let p = load_poset(cli)?;
    let ext = match &cli.ext {
        Some(s) => parse_extension(&p, s)?,
        None => p.default_extension().clone(),
    };
    match &cli.command {
        Command::Check { axiom } => cmd_check(&p, axiom.as_deref()),
        Command::Classify => Ok(cmd_classify(&p)),
        Command::Lattice => cmd_lattice(&p, &ext),
        Command::Extensions => Ok(cmd_extensions(&p)),
        Command::Stackwise { m, flag } => cmd_stackwise(&p, &ext, *m, flag),
        Command::Expand { m, word } => cmd_expand(&p, &ext, *m, word),
        Command::Certify {
            m_max,
            all_extensions,
            words,
            seed,
        } => cmd_certify(&p, *m_max, *all_extensions, *words, *seed),
        Command::VerifyIdentities {
            pmax,
            qmax,
            rmax,
            m,
            sample,
            seed,
        } => cmd_verify_identities(&p, &ext, *m, *pmax, *qmax, *rmax, *sample, *seed),
        Command::Mu => cmd_mu(&p, &ext),
        Command::VerifyRep { force } => cmd_verify_rep(&p, *force),
        Command::Count { m } => cmd_count(&p, *m),
        Command::Seshadri { m } => cmd_seshadri(&p, *m),
    }
}

/// Print a line, shrugging off a consumer that closed the pipe early.
fn emit(s: &str) {
    use std::io::Write;
    let _ = writeln!(std::io::stdout().lock(), "{s}");
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(&cli) {
        Ok(outcome) => {
            if cli.json {
                emit(&serde_json::to_string_pretty(&outcome.json).expect("report serializes"));
            } else {
                emit(&outcome.text);
            }
            if outcome.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::Input(_) | Error::TooLarge(_) => ExitCode::from(2),
                _ => ExitCode::from(1),
            }
        }
    }
}
