//! Command-line driver. Parses arguments, calls the library, formats output.
//!
//! Exit codes: 0 on success, 1 on usage and other errors, 2 when the group
//! does not embed or the request is outside the classified range, 3 when a
//! verification or sweep finds a mismatch. Errors go to stderr as one line of
//! JSON carrying the schema version, the error kind and a message.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::arith::{hilbert_symbol, local_symbols};
use crate::catalog::{
    cyclic_subgroup, dihedral, dihedral_by_trace, heisenberg_pair, involution, klein_four, polyhedral,
};
use crate::census::{full_sweep, subgroup_census, verify_classification, CellStatus, CensusOptions, CensusReport};
use crate::classify::{conjugacy_classes, embeds, mu_r_full};
use crate::error::{Error, Result};
use crate::fields::{Elem, Field};
use crate::galois::kummer_check;
use crate::pgl::{GroupType, SubgroupRecord};
use crate::wire::{self, WireSubgroup};

/// Default square-class bound for class lists over Q.
pub const DEFAULT_BOUND: u64 = 10;

/// Field sizes covered by `sweep` when `--q` is omitted.
pub const DEFAULT_SWEEP_QS: [u64; 6] = [3, 5, 7, 9, 11, 13];

#[derive(Debug, Parser)]
#[command(name = "pgl2", version, about = "Finite subgroups of PGL_2(K)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Decide whether PGL_2(K) contains the group, with a witness.
    Embed(FieldGroup),
    /// List conjugacy classes of the group in PGL_2(K).
    Classes {
        #[command(flatten)]
        target: FieldGroup,
        /// Square-class bound over Q.
        #[arg(long, default_value_t = DEFAULT_BOUND)]
        bound: u64,
    },
    /// Build one explicit subgroup.
    Construct(ConstructArgs),
    /// Brute-force conjugacy classes in PGL_2(F_q).
    Census(CensusArgs),
    /// Compare the classification with the census over F_q.
    Verify {
        #[command(flatten)]
        census: CensusArgs,
        /// Reuse or store the report as census_q<q>_<type>.json here.
        #[arg(long)]
        cache_dir: Option<PathBuf>,
    },
    /// Verify every admissible type for each q.
    Sweep(SweepArgs),
    /// Quadratic Hilbert symbol (alpha, beta).
    Hilbert {
        #[arg(long)]
        field: String,
        #[arg(long, allow_hyphen_values = true)]
        alpha: String,
        #[arg(long, allow_hyphen_values = true)]
        beta: String,
        #[arg(long)]
        json: bool,
    },
    /// Compare F_q*/F_q*^r with H^1 of the Frobenius on mu_r.
    H1 {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        r: u64,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Debug, Args)]
struct FieldGroup {
    /// Q, F<p>, F<p>^<k> or F<p>^<k>:poly=<c0,...,1>.
    #[arg(long)]
    field: String,
    /// C<r>, D<r>, V4, A4, S4 or A5.
    #[arg(long)]
    group: String,
    #[arg(long)]
    json: bool,
}

#[derive(Debug, Args)]
struct ConstructArgs {
    #[arg(long)]
    field: String,
    #[arg(long, required_unless_present = "heisenberg")]
    group: Option<String>,
    /// Parameter of C2, V4 and dihedral groups.
    #[arg(long, allow_hyphen_values = true)]
    alpha: Option<String>,
    /// Second parameter of V4.
    #[arg(long, allow_hyphen_values = true)]
    beta: Option<String>,
    /// Size of the Heisenberg pair.
    #[arg(long, requires = "heisenberg")]
    r: Option<u64>,
    /// Build the commuting pair A, B of PGL_r instead of a subgroup of PGL_2.
    #[arg(long, requires = "r", conflicts_with_all = ["group", "alpha", "beta"])]
    heisenberg: bool,
    #[arg(long)]
    json: bool,
}

#[derive(Debug, Args)]
struct CensusArgs {
    #[arg(long)]
    q: u64,
    #[arg(long)]
    group: String,
    /// Worker threads; 0 uses all cores.
    #[arg(long, default_value_t = 0)]
    threads: usize,
    /// Shuffle the candidate order with this seed.
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    json: bool,
}

#[derive(Debug, Args)]
struct SweepArgs {
    /// Field sizes, comma separated.
    #[arg(long, value_delimiter = ',')]
    q: Vec<u64>,
    /// Restrict to these types, comma separated.
    #[arg(long, value_delimiter = ',')]
    group: Vec<String>,
    #[arg(long, default_value_t = 0)]
    threads: usize,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    cache_dir: Option<PathBuf>,
    #[arg(long)]
    json: bool,
}

/// Exit code and captured streams of one invocation.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Runs one command. `argv[0]` is the program name.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code: 1,
                    stderr: text,
                    ..Outcome::default()
                }
            } else {
                Outcome {
                    code: 0,
                    stdout: text,
                    ..Outcome::default()
                }
            };
        }
    };
    let mut out = Outcome::default();
    if let Err(e) = dispatch(cli.command, &mut out) {
        out.code = match e {
            Error::NotEmbeddable { .. } | Error::OutsideScope { .. } => 2,
            _ => 1,
        };
        out.stderr.push_str(&error_json(&e));
    }
    out
}

fn error_json(e: &Error) -> String {
    let mut s = serde_json::to_string(&wire::WireError::from_error(e)).expect("wire types serialize");
    s.push('\n');
    s
}

fn parse_group(text: &str, out: &mut Outcome) -> Result<GroupType> {
    let (group, notice) = GroupType::parse_with_notice(text)?;
    if let Some(n) = notice {
        let _ = writeln!(out.stderr, "note: {n}");
    }
    Ok(group)
}

fn census_options(threads: usize, seed: Option<u64>) -> CensusOptions {
    CensusOptions {
        threads,
        shuffle_seed: seed,
        ..CensusOptions::default()
    }
}

fn dispatch(command: Command, out: &mut Outcome) -> Result<()> {
    match command {
        Command::Embed(t) => cmd_embed(t, out),
        Command::Classes { target, bound } => cmd_classes(target, bound, out),
        Command::Construct(a) => cmd_construct(a, out),
        Command::Census(a) => cmd_census(a, out),
        Command::Verify { census, cache_dir } => cmd_verify(census, cache_dir, out),
        Command::Sweep(a) => cmd_sweep(a, out),
        Command::Hilbert {
            field,
            alpha,
            beta,
            json,
        } => cmd_hilbert(&field, &alpha, &beta, json, out),
        Command::H1 { q, r, json } => cmd_h1(q, r, json, out),
    }
}

fn write_record(out: &mut String, record: &SubgroupRecord, indent: &str) {
    let _ = writeln!(out, "{indent}order {}", record.order());
    for g in &record.generators {
        let _ = writeln!(out, "{indent}generator {g}");
    }
    if !record.det_image.is_empty() {
        let det: Vec<String> = record.det_image.iter().map(|e| e.to_string()).collect();
        let _ = writeln!(out, "{indent}det image {{{}}}", det.join(", "));
    }
}

fn cmd_embed(t: FieldGroup, out: &mut Outcome) -> Result<()> {
    let field: Field = t.field.parse()?;
    let group = parse_group(&t.group, out)?;
    let e = embeds(&field, group)?;
    if t.json {
        out.stdout = wire::to_json(&wire::WireEmbedding {
            version: wire::SCHEMA_VERSION,
            field: field.to_string(),
            group: group.to_string(),
            embeds: e.embeds,
            reason: e.reason.clone(),
            witness: e.witness.as_ref().map(WireSubgroup::from_record),
        });
    } else if e.embeds {
        let _ = writeln!(out.stdout, "YES: {}", e.reason);
        if let Some(w) = &e.witness {
            write_record(&mut out.stdout, w, "  ");
        }
    } else {
        let _ = writeln!(out.stdout, "NO: {}", e.reason);
    }
    if e.embeds {
        Ok(())
    } else {
        Err(Error::NotEmbeddable {
            group,
            field: field.to_string(),
            reason: e.reason,
        })
    }
}

fn cmd_classes(t: FieldGroup, bound: u64, out: &mut Outcome) -> Result<()> {
    let field: Field = t.field.parse()?;
    let group = parse_group(&t.group, out)?;
    let list = conjugacy_classes(&field, group, bound)?;
    if t.json {
        out.stdout = wire::to_json(&wire::WireClassList::from_list(&list));
        return Ok(());
    }
    if let Some(b) = list.truncated_at {
        let _ = writeln!(
            out.stdout,
            "TRUNCATED: square classes of {field} listed up to |n| <= {b}"
        );
    }
    let _ = writeln!(out.stdout, "{group} in PGL_2({field}): {} classes", list.len());
    for (d, rep) in &list.classes {
        let _ = writeln!(out.stdout, "{d}");
        write_record(&mut out.stdout, rep, "  ");
    }
    Ok(())
}

fn cmd_construct(a: ConstructArgs, out: &mut Outcome) -> Result<()> {
    let field: Field = a.field.parse()?;
    if a.heisenberg {
        let r = a.r.expect("clap requires --r");
        let h = heisenberg_pair(&field, r)?;
        let rows = |m: &crate::pgl::Matrix| -> Vec<Vec<String>> {
            m.rows()
                .iter()
                .map(|row| row.iter().map(|e| e.to_string()).collect())
                .collect()
        };
        if a.json {
            out.stdout = wire::to_json(&wire::WireHeisenberg {
                version: wire::SCHEMA_VERSION,
                field: field.to_string(),
                r,
                zeta: h.zeta.to_string(),
                a: rows(&h.a),
                b: rows(&h.b),
            });
        } else {
            let _ = writeln!(out.stdout, "zeta {}", h.zeta);
            let _ = writeln!(out.stdout, "A {}", h.a);
            let _ = writeln!(out.stdout, "B {}", h.b);
        }
        return Ok(());
    }
    let group = parse_group(a.group.as_deref().expect("clap requires --group"), out)?;
    let elem = |s: &Option<String>, default: i64| -> Result<Elem> {
        s.as_deref().map_or(Ok(field.int(default)), |t| field.parse_elem(t))
    };
    let alpha = elem(&a.alpha, 1)?;
    let record = match group {
        GroupType::Cyclic(2) if a.alpha.is_some() => involution(&field, &alpha)?,
        GroupType::Cyclic(r) => cyclic_subgroup(&field, r)?,
        GroupType::Klein4 => klein_four(&field, &alpha, &elem(&a.beta, -1)?)?,
        GroupType::Dihedral(r) if a.alpha.is_some() || mu_r_full(&field, r) => dihedral(&field, r, &alpha)?,
        GroupType::Dihedral(r) => dihedral_by_trace(&field, r)?,
        GroupType::A4 | GroupType::S4 | GroupType::A5 => polyhedral(&field, group)?,
    };
    if a.json {
        out.stdout = wire::to_json(&wire::WireConstruction {
            version: wire::SCHEMA_VERSION,
            field: field.to_string(),
            subgroup: WireSubgroup::from_record(&record),
        });
    } else {
        let _ = writeln!(out.stdout, "{} in PGL_2({field})", record.iso_type);
        write_record(&mut out.stdout, &record, "  ");
    }
    Ok(())
}

fn cmd_census(a: CensusArgs, out: &mut Outcome) -> Result<()> {
    let group = parse_group(&a.group, out)?;
    let classes = subgroup_census(a.q, group, &census_options(a.threads, a.seed))?;
    let field = Field::finite(a.q)?;
    if a.json {
        out.stdout = wire::to_json(&wire::WireCensus {
            version: wire::SCHEMA_VERSION,
            q: a.q,
            field: field.to_string(),
            group: group.to_string(),
            classes: classes.iter().map(WireSubgroup::from_record).collect(),
        });
        return Ok(());
    }
    let _ = writeln!(out.stdout, "{group} in PGL_2({field}): {} classes", classes.len());
    for (i, c) in classes.iter().enumerate() {
        let _ = writeln!(out.stdout, "class {i}");
        write_record(&mut out.stdout, c, "  ");
    }
    Ok(())
}

fn cmd_verify(a: CensusArgs, cache_dir: Option<PathBuf>, out: &mut Outcome) -> Result<()> {
    let group = parse_group(&a.group, out)?;
    let opts = census_options(a.threads, a.seed);
    let report: CensusReport = match &cache_dir {
        Some(dir) => {
            let path = wire::cache_path(dir, a.q, group);
            if path.exists() {
                wire::load_report(&path)?
            } else {
                let r = verify_classification(a.q, group, &opts)?;
                wire::save_report(&path, &r)?;
                r
            }
        }
        None => verify_classification(a.q, group, &opts)?,
    };
    if a.json {
        out.stdout = wire::report_to_json(&report);
    } else {
        let _ = writeln!(out.stdout, "{}", report.summary());
        for n in &report.notes {
            let _ = writeln!(out.stdout, "note: {n}");
        }
    }
    if !report.matched {
        out.code = 3;
    }
    Ok(())
}

fn cmd_sweep(a: SweepArgs, out: &mut Outcome) -> Result<()> {
    let qs = if a.q.is_empty() { DEFAULT_SWEEP_QS.to_vec() } else { a.q };
    for &q in &qs {
        Field::finite(q)?;
    }
    let types = a
        .group
        .iter()
        .map(|g| parse_group(g, out))
        .collect::<Result<Vec<_>>>()?;
    let opts = census_options(a.threads, a.seed);
    let cells = full_sweep(
        &qs,
        if types.is_empty() { None } else { Some(&types) },
        &opts,
        a.cache_dir.as_deref(),
    );
    if a.json {
        out.stdout = wire::to_json(&wire::WireSweep::from_cells(&cells));
    } else {
        for c in &cells {
            let _ = writeln!(out.stdout, "{c}");
        }
        let matched = cells.iter().filter(|c| c.status == CellStatus::Match).count();
        let _ = writeln!(out.stdout, "{matched} of {} cells match", cells.len());
    }
    if cells
        .iter()
        .any(|c| matches!(c.status, CellStatus::Mismatch | CellStatus::Error(_)))
    {
        out.code = 3;
    }
    Ok(())
}

fn cmd_hilbert(field: &str, alpha: &str, beta: &str, json: bool, out: &mut Outcome) -> Result<()> {
    let field: Field = field.parse()?;
    let a = field.parse_elem(alpha)?;
    let b = field.parse_elem(beta)?;
    let value = hilbert_symbol(&field, &a, &b)?;
    let local = match (a.as_rational(), b.as_rational()) {
        (Some(x), Some(y)) => local_symbols(x, y)?,
        _ => Vec::new(),
    };
    if json {
        out.stdout = wire::to_json(&wire::WireHilbert {
            version: wire::SCHEMA_VERSION,
            field: field.to_string(),
            alpha: a.to_string(),
            beta: b.to_string(),
            split: value.split,
            local: local
                .iter()
                .map(|(p, v)| wire::WireLocalSymbol {
                    place: p.to_string(),
                    sign: v.sign(),
                })
                .collect(),
        });
        return Ok(());
    }
    let _ = writeln!(out.stdout, "({a},{b}) over {field}: {value}");
    for (p, v) in &local {
        let _ = writeln!(out.stdout, "  at {p}: {:+}", v.sign());
    }
    Ok(())
}

fn cmd_h1(q: u64, r: u64, json: bool, out: &mut Outcome) -> Result<()> {
    let k = kummer_check(q, r)?;
    if json {
        out.stdout = wire::to_json(&wire::WireKummer::from_check(&k));
    } else {
        let _ = writeln!(out.stdout, "F_{q}*/F_{q}*^{r} has order {}", k.index);
        for l in &k.levels {
            let _ = writeln!(out.stdout, "  m={}: killed classes {}, |H^1| {}", l.m, l.kernel, l.h1);
        }
        let _ = writeln!(out.stdout, "{}", if k.passed { "PASS" } else { "FAIL" });
    }
    if !k.passed {
        out.code = 3;
    }
    Ok(())
}
