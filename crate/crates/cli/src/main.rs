//! `lq`: classify, enumerate, construct and verify finite left quasigroups,
//! racks and quandles from the command line.
//!
//! Exit codes: 0 = success / all checks pass, 1 = a mathematical
//! counterexample was found (witness on stdout), 2 = input or usage error.

use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use lq_core::congruence::{self, all_congruences};
use lq_core::constructions::{
    affine, conj_quandle, coset_orbit_lemma_check, gt_theta, gt_theta_fix_check,
    gt_theta_superfaithful_check, permutation_lq,
};
use lq_core::displacement::{self, dis_zero_sum_check, DisplacementData};
use lq_core::enumerate::{corpus, enumerate, CorpusEntry, CorpusManifest, EnumSpec, StructureClass};
use lq_core::groups::{cyclic, dihedral_group, quaternion8, symmetric, FiniteGroup, GroupMap};
use lq_core::involutory::{
    check_gen_of_dis, check_gen_of_dis2, finiteness_identity_witness, group_corollaries,
    nilpotent_theorem_check, ord_parity_witness, reductive_suite, theorem_suite_involutory,
};
use lq_core::io;
use lq_core::properties::{
    self, central_factor_check, classify, extension_check, principal_decomposition_check,
};
use lq_core::table::fixtures;
use lq_core::{LeftQuasigroup, Partition, PermGroup};

#[derive(Parser)]
#[command(
    name = "lq",
    version,
    about = "Finite left quasigroups, racks and quandles: classify, verify, enumerate, construct"
)]
struct Cli {
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Worker threads (default: all cores)
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Cmd {
    /// Classify a structure from a table file ('-' = stdin)
    Classify { input: String },
    /// Print the full congruence lattice with the named congruences flagged
    Congruences { input: String },
    /// Run a verification suite over a file, a corpus manifest, or
    /// freshly enumerated structures up to --max-order
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        /// Single table file ('-' = stdin)
        input: Option<String>,
        /// Corpus manifest to verify against
        #[arg(long)]
        corpus: Option<PathBuf>,
        /// Enumerate structures up to this order (default 6)
        #[arg(long)]
        max_order: Option<usize>,
        /// Reject input groups above this order
        #[arg(long, default_value_t = 5000)]
        cap_group_order: u128,
    },
    /// Enumerate one order (tables to stdout) or a manifest up to --max-order
    Enumerate {
        #[arg(long)]
        class: StructureClass,
        #[arg(long, conflicts_with = "max_order")]
        order: Option<usize>,
        #[arg(long)]
        max_order: Option<usize>,
        /// Write the manifest here instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build a structure and print its table
    Construct {
        #[command(subcommand)]
        kind: ConstructCmd,
    },
    /// Quotient by the congruence generated by the given pairs
    Quotient {
        input: String,
        /// 1-based pairs, e.g. "1,2" or "1,2;4,5"
        #[arg(long)]
        pairs: String,
    },
    /// Test two tables for isomorphism; exits 1 if none exists
    Iso { a: String, b: String },
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Suite {
    /// Equivalence and identity theorems for involutory quandles
    Involutory,
    /// Local-reductivity degree correspondence
    Reductive,
    /// Zero-exponent-sum oracle and quotient surjectivity
    Displacement,
    /// Displacement commutator vs. term-condition commutator
    Commutator,
    /// Principal decomposition and central-factor transfer
    Superfaithful,
    /// Block/factor property transfer along congruences
    Extensions,
    /// Coset and power-quandle construction lemmas (built-in sweep)
    Constructions,
    /// Involution-class corollaries for finite groups
    GroupCorollaries,
}

#[derive(Subcommand)]
enum ConstructCmd {
    /// Affine structure over Z_n: x∗y = g·x + f·y + c (g defaults to 1−f,
    /// giving the affine quandle)
    Affine {
        #[arg(long)]
        cyclic: usize,
        #[arg(long, allow_hyphen_values = true)]
        f: i64,
        #[arg(long, allow_hyphen_values = true)]
        g: Option<i64>,
        #[arg(long, default_value_t = 0)]
        c: usize,
    },
    /// Dihedral quandle R_n: x∗y = 2x − y mod n
    Dihedral { n: usize },
    /// Projection left quasigroup P_n: x∗y = y
    Projection { n: usize },
    /// Permutation left quasigroup: every row is the given permutation
    Permutation {
        /// 1-based images, e.g. "2 3 1"
        #[arg(long)]
        images: String,
    },
    /// Conjugation quandle on a group file, restricted to the conjugacy
    /// class of --element (1-based) or the whole group
    Conj {
        #[arg(long)]
        group: String,
        #[arg(long)]
        element: Option<usize>,
    },
    /// Power quandle (G, t, θ) with θ = x ↦ x^k on an abelian group file
    GtTheta {
        #[arg(long)]
        group: String,
        #[arg(long)]
        t: usize,
        #[arg(long, allow_hyphen_values = true)]
        theta_power: i64,
    },
    /// Direct product of two tables
    Product { a: String, b: String },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        if rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
            .is_err()
        {
            eprintln!("error: could not configure {jobs} worker threads");
            return ExitCode::from(2);
        }
    }
    match run(&cli) {
        Ok(Outcome::Pass) => ExitCode::SUCCESS,
        Ok(Outcome::Counterexample) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

enum Outcome {
    Pass,
    Counterexample,
}

type CliResult = Result<Outcome, Box<dyn std::error::Error>>;

fn read_input(path: &str) -> Result<String, Box<dyn std::error::Error>> {
    if path == "-" {
        let mut buf = String::new();
        std::io::stdin().read_to_string(&mut buf)?;
        Ok(buf)
    } else {
        Ok(std::fs::read_to_string(path).map_err(|e| format!("{path}: {e}"))?)
    }
}

fn load_table(path: &str) -> Result<LeftQuasigroup, Box<dyn std::error::Error>> {
    Ok(io::parse_table(&read_input(path)?)?)
}

fn load_group(path: &str) -> Result<FiniteGroup, Box<dyn std::error::Error>> {
    Ok(io::parse_group(&read_input(path)?)?)
}

fn print_table(q: &LeftQuasigroup, format: Format) {
    match format {
        Format::Text => print!("{}", io::format_table(q)),
        Format::Json => println!(
            "{}",
            json!({
                "order": q.order(),
                "table": q.flat().iter().map(|x| x + 1).collect::<Vec<_>>(),
            })
        ),
    }
}

fn one_based_blocks(p: &Partition) -> Vec<Vec<usize>> {
    p.blocks()
        .iter()
        .map(|b| b.iter().map(|x| x + 1).collect())
        .collect()
}

fn run(cli: &Cli) -> CliResult {
    match &cli.cmd {
        Cmd::Classify { input } => cmd_classify(&load_table(input)?, cli.format),
        Cmd::Congruences { input } => cmd_congruences(&load_table(input)?, cli.format),
        Cmd::Verify {
            suite,
            input,
            corpus,
            max_order,
            cap_group_order,
        } => cmd_verify(
            *suite,
            input.as_deref(),
            corpus.as_deref(),
            *max_order,
            *cap_group_order,
            cli.format,
        ),
        Cmd::Enumerate {
            class,
            order,
            max_order,
            out,
        } => cmd_enumerate(*class, *order, *max_order, out.as_deref(), cli.format),
        Cmd::Construct { kind } => cmd_construct(kind, cli.format),
        Cmd::Quotient { input, pairs } => cmd_quotient(&load_table(input)?, pairs, cli.format),
        Cmd::Iso { a, b } => cmd_iso(&load_table(a)?, &load_table(b)?, cli.format),
    }
}

fn cmd_classify(q: &LeftQuasigroup, format: Format) -> CliResult {
    let report = classify(q);
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&report)?),
        Format::Text => {
            println!("order                    {}", report.order);
            let flags = [
                ("left_quasigroup", report.left_quasigroup),
                ("idempotent", report.idempotent),
                ("involutory", report.involutory),
                ("rack", report.rack),
                ("quandle", report.quandle),
                ("latin", report.latin),
                ("projection", report.projection),
                ("permutation", report.permutation),
                ("faithful", report.faithful),
                ("superfaithful", report.superfaithful),
                ("connected", report.connected),
                ("superconnected", report.superconnected),
                ("homogeneous", report.homogeneous),
            ];
            for (name, value) in flags {
                println!("{name:<24} {value}");
            }
            println!(
                "locally_reductive_degree {}",
                opt(report.locally_reductive_degree)
            );
            println!(
                "lagrange                 {}",
                report
                    .lagrange
                    .map_or("unknown".to_string(), |b| b.to_string())
            );
            println!("lmlt_order               {}", report.lmlt_order);
            println!("dis_order                {}", report.dis_order);
            println!("solvable_length          {}", opt(report.solvable_length));
            println!("nilpotence_length        {}", opt(report.nilpotence_length));
            for (name, w) in &report.witnesses {
                let shown: Vec<usize> = w.iter().map(|x| x + 1).collect();
                println!("witness {name:<16} {shown:?}");
            }
        }
    }
    Ok(Outcome::Pass)
}

fn opt(v: Option<usize>) -> String {
    v.map_or("none".to_string(), |x| x.to_string())
}

fn cmd_congruences(q: &LeftQuasigroup, format: Format) -> CliResult {
    let lattice = all_congruences(q);
    let data = DisplacementData::new(q);
    let mut named: Vec<(&str, Partition)> = vec![
        ("lambda", congruence::cayley_kernel(q).0),
        ("orbit", congruence::orbit_congruence(&data)),
    ];
    if let Ok(p) = congruence::sigma_congruence(&data) {
        named.push(("sigma", p));
    }
    if let Ok(p) = congruence::ip_congruence(q) {
        named.push(("ip", p));
    }
    if let Ok(p) = congruence::center_congruence(&data) {
        named.push(("center", p));
    }
    match format {
        Format::Json => {
            let entries: Vec<_> = lattice
                .congruences()
                .iter()
                .map(|p| {
                    let tags: Vec<&str> = named
                        .iter()
                        .filter(|(_, n)| n == p)
                        .map(|(t, _)| *t)
                        .collect();
                    json!({"blocks": one_based_blocks(p), "named": tags})
                })
                .collect();
            println!(
                "{}",
                serde_json::to_string_pretty(&json!({
                    "order": q.order(),
                    "count": lattice.len(),
                    "congruences": entries,
                }))?
            );
        }
        Format::Text => {
            println!("congruences: {}", lattice.len());
            for p in lattice.congruences() {
                let blocks: Vec<String> = one_based_blocks(p)
                    .iter()
                    .map(|b| {
                        let inner: Vec<String> = b.iter().map(|x| x.to_string()).collect();
                        format!("{{{}}}", inner.join(","))
                    })
                    .collect();
                let tags: Vec<&str> = named
                    .iter()
                    .filter(|(_, n)| n == p)
                    .map(|(t, _)| *t)
                    .collect();
                let suffix = if tags.is_empty() {
                    String::new()
                } else {
                    format!("   [{}]", tags.join(", "))
                };
                println!("{}{}", blocks.join(" "), suffix);
            }
        }
    }
    Ok(Outcome::Pass)
}

/// One suite failure, reported with the 1-based table for reproduction.
struct Failure {
    table: Vec<usize>,
    detail: String,
}

fn fail(q: &LeftQuasigroup, detail: impl Into<String>) -> Failure {
    Failure {
        table: q.flat().iter().map(|x| x + 1).collect(),
        detail: detail.into(),
    }
}

fn scope_structures(
    class: StructureClass,
    input: Option<&str>,
    manifest: Option<&Path>,
    max_order: Option<usize>,
) -> Result<Vec<LeftQuasigroup>, Box<dyn std::error::Error>> {
    if let Some(path) = input {
        return Ok(vec![load_table(path)?]);
    }
    if let Some(path) = manifest {
        return Ok(io::read_manifest(path)?.structures()?);
    }
    let cap = max_order.unwrap_or(6).min(class.cap());
    // a cached manifest (from `lq enumerate --out`) avoids re-enumeration
    if let Ok(dir) = std::env::var("LQ_CORPUS_DIR") {
        let candidate = Path::new(&dir).join(format!("{}-{}.json", class.name(), class.cap()));
        if candidate.exists() {
            let manifest = io::read_manifest(&candidate)?;
            return Ok(manifest
                .entries
                .iter()
                .filter(|e| e.order <= cap)
                .map(|e| e.structures())
                .collect::<lq_core::Result<Vec<_>>>()?
                .into_iter()
                .flatten()
                .collect());
        }
    }
    Ok(corpus(cap, class)?.structures()?)
}

fn cmd_verify(
    suite: Suite,
    input: Option<&str>,
    manifest: Option<&Path>,
    max_order: Option<usize>,
    cap_group_order: u128,
    format: Format,
) -> CliResult {
    let suite_name;
    let mut failures: Vec<Failure> = Vec::new();
    let mut checked = 0usize;
    match suite {
        Suite::Involutory => {
            suite_name = "involutory";
            let pool =
                scope_structures(StructureClass::InvolutoryQuandle, input, manifest, max_order)?;
            for q in pool.iter().filter(|q| q.is_quandle() && q.is_involutory()) {
                checked += 1;
                let report = theorem_suite_involutory(q)?;
                for check in report.checks.iter().filter(|c| !c.pass) {
                    failures.push(fail(q, format!("theorem check {} failed", check.name)));
                }
                if !check_gen_of_dis(q)?.pass {
                    failures.push(fail(q, "odd/even generator product identity failed"));
                }
                if !check_gen_of_dis2(q)?.pass {
                    failures.push(fail(q, "2-power generator product identity failed"));
                }
                if let Some((a, b)) = finiteness_identity_witness(q)? {
                    failures.push(fail(q, format!("sg({},{}) is not the orbit union", a + 1, b + 1)));
                }
                if let Some((a, b)) = ord_parity_witness(q)? {
                    failures.push(fail(q, format!("parity law failed at ({},{})", a + 1, b + 1)));
                }
                if nilpotent_theorem_check(q)? == Some(false) {
                    failures.push(fail(q, "nilpotent latin equivalence failed"));
                }
            }
        }
        Suite::Reductive => {
            suite_name = "reductive";
            let pool =
                scope_structures(StructureClass::InvolutoryQuandle, input, manifest, max_order)?;
            for q in pool.iter().filter(|q| q.is_quandle() && q.is_involutory()) {
                checked += 1;
                let report = reductive_suite(q)?;
                for check in report.checks.iter().filter(|c| !c.pass) {
                    failures.push(fail(q, format!("reductivity check {} failed", check.name)));
                }
            }
        }
        Suite::Displacement => {
            suite_name = "displacement";
            let pool = scope_structures(StructureClass::Rack, input, manifest, max_order)?;
            for q in &pool {
                checked += 1;
                if !dis_zero_sum_check(q)? {
                    failures.push(fail(q, "zero-exponent-sum closure differs from Dis"));
                }
                let data = DisplacementData::new(q);
                for alpha in all_congruences(q).congruences() {
                    let (factor, _) = q.quotient(alpha)?;
                    let image: Vec<_> = data
                        .dis()
                        .generators()
                        .iter()
                        .map(|g| data.pi_alpha(alpha, g))
                        .collect::<lq_core::Result<_>>()?;
                    let image_group = PermGroup::from_elements(alpha.num_blocks(), image.iter())?;
                    if image_group.order() != displacement::dis(&factor).order() {
                        failures.push(fail(q, "projection of Dis is not onto Dis of the factor"));
                    }
                }
            }
        }
        Suite::Commutator => {
            suite_name = "commutator";
            let pool = scope_structures(StructureClass::Quandle, input, manifest, max_order)?;
            for q in pool
                .iter()
                .filter(|q| q.is_quandle() && properties::is_superconnected(q))
            {
                checked += 1;
                let data = DisplacementData::new(q);
                let lattice = all_congruences(q);
                for alpha in lattice.congruences() {
                    for beta in lattice.congruences() {
                        if congruence::dis_commutator(&data, alpha, beta)?
                            != congruence::tc_commutator(q, alpha, beta)?
                        {
                            failures.push(fail(q, "commutator mismatch"));
                        }
                    }
                }
            }
        }
        Suite::Superfaithful => {
            suite_name = "superfaithful";
            let pool = scope_structures(StructureClass::Quandle, input, manifest, max_order)?;
            for q in pool.iter().filter(|q| q.is_quandle()) {
                checked += 1;
                if principal_decomposition_check(q)? == Some(false) {
                    failures.push(fail(q, "principal decomposition failed"));
                }
                if central_factor_check(q)? == Some(false) {
                    failures.push(fail(q, "central factor lost superfaithfulness"));
                }
            }
        }
        Suite::Extensions => {
            suite_name = "extensions";
            let pool = scope_structures(StructureClass::Quandle, input, manifest, max_order)?;
            for q in pool.iter().filter(|q| q.is_idempotent()) {
                checked += 1;
                for alpha in all_congruences(q).congruences() {
                    let report = extension_check(q, alpha)?;
                    let parts = [
                        ("faithful", &report.faithful),
                        ("superfaithful", &report.superfaithful),
                        ("connected", &report.connected),
                        ("superconnected", &report.superconnected),
                    ];
                    for (name, _) in parts.iter().filter(|(_, c)| !c.holds) {
                        failures.push(fail(q, format!("extension check {name} failed")));
                    }
                }
            }
        }
        Suite::Constructions => {
            suite_name = "constructions";
            let groups: Vec<FiniteGroup> = vec![cyclic(3), cyclic(4), symmetric(3)];
            let probe = fixtures::projection(1);
            for g in &groups {
                for theta in g.automorphisms() {
                    checked += 1;
                    if coset_orbit_lemma_check(g, &[g.identity()], &theta)?.is_some() {
                        failures.push(fail(&probe, "coset orbit lemma failed on trivial subgroup"));
                    }
                    for t in 1..=4 {
                        let (_, power, h_t, theta_t) = gt_theta(g, t, &theta)?;
                        if coset_orbit_lemma_check(&power, &h_t, &theta_t)?.is_some() {
                            failures.push(fail(&probe, "coset orbit lemma failed on power quandle"));
                        }
                        if !gt_theta_fix_check(g, t, &theta)? {
                            failures.push(fail(&probe, "fixed-coset closed form failed"));
                        }
                        if !gt_theta_superfaithful_check(g, t, &theta)? {
                            failures.push(fail(&probe, "superfaithfulness transfer failed"));
                        }
                    }
                }
            }
        }
        Suite::GroupCorollaries => {
            suite_name = "group-corollaries";
            let probe = fixtures::projection(1);
            let groups: Vec<FiniteGroup> = match input {
                Some(path) => vec![load_group(path)?],
                None => {
                    let mut gs = vec![symmetric(3), symmetric(4), quaternion8()];
                    gs.extend((2..=12).map(dihedral_group));
                    gs
                }
            };
            for g in &groups {
                if g.order() as u128 > cap_group_order {
                    return Err(format!(
                        "group order {} exceeds --cap-group-order {}",
                        g.order(),
                        cap_group_order
                    )
                    .into());
                }
                let mut seen: Vec<usize> = Vec::new();
                for x in 0..g.order() {
                    if g.element_order(x) != 2 {
                        continue;
                    }
                    let class = g.conjugacy_class(x);
                    if seen.contains(&class[0]) {
                        continue;
                    }
                    seen.push(class[0]);
                    if g.subgroup_closure(&class).len() != g.order() {
                        continue;
                    }
                    checked += 1;
                    let report = group_corollaries(g, &class)?;
                    if !report.pass {
                        failures.push(fail(
                            &probe,
                            format!(
                                "corollary failed on a group of order {} (class of size {})",
                                g.order(),
                                report.class_size
                            ),
                        ));
                    }
                }
            }
        }
    }
    let pass = failures.is_empty();
    match format {
        Format::Json => {
            let entries: Vec<_> = failures
                .iter()
                .map(|f| json!({"table": f.table, "detail": f.detail}))
                .collect();
            println!(
                "{}",
                serde_json::to_string_pretty(&json!({
                    "suite": suite_name,
                    "checked": checked,
                    "pass": pass,
                    "failures": entries,
                }))?
            );
        }
        Format::Text => {
            for f in &failures {
                println!("FAIL {}: {} (table {:?})", suite_name, f.detail, f.table);
            }
            println!(
                "suite {}: {} ({} structures checked, {} failures)",
                suite_name,
                if pass { "pass" } else { "FAIL" },
                checked,
                failures.len()
            );
        }
    }
    Ok(if pass { Outcome::Pass } else { Outcome::Counterexample })
}

fn cmd_enumerate(
    class: StructureClass,
    order: Option<usize>,
    max_order: Option<usize>,
    out: Option<&Path>,
    format: Format,
) -> CliResult {
    let manifest = match (order, max_order) {
        (Some(n), _) => {
            let tables = enumerate(EnumSpec {
                order: n,
                class,
                canonical_only: true,
            })?;
            CorpusManifest {
                entries: vec![CorpusEntry {
                    class: class.name().to_string(),
                    order: n,
                    count: tables.len(),
                    tables: tables
                        .iter()
                        .map(|q| q.flat().iter().map(|x| x + 1).collect())
                        .collect(),
                }],
            }
        }
        (None, Some(cap)) => corpus(cap.min(class.cap()), class)?,
        (None, None) => return Err("pass --order or --max-order".into()),
    };
    if let Some(path) = out {
        io::write_string(path, &io::format_manifest(&manifest))?;
        return Ok(Outcome::Pass);
    }
    match format {
        Format::Json => println!("{}", io::format_manifest(&manifest)),
        Format::Text => {
            for entry in &manifest.entries {
                println!("# {} order {}: {} classes", entry.class, entry.order, entry.count);
                for q in entry.structures()? {
                    print!("{}", io::format_table(&q));
                    println!();
                }
            }
        }
    }
    Ok(Outcome::Pass)
}

fn cmd_construct(kind: &ConstructCmd, format: Format) -> CliResult {
    let q = match kind {
        ConstructCmd::Affine { cyclic: n, f, g, c } => {
            let group = cyclic(*n);
            let f_map = GroupMap::power_map(&group, *f)?;
            let g_map = GroupMap::power_map(&group, g.unwrap_or(1 - *f))?;
            affine(&group, &g_map, &f_map, *c % (*n).max(1))?
        }
        ConstructCmd::Dihedral { n } => fixtures::dihedral(*n),
        ConstructCmd::Projection { n } => fixtures::projection(*n),
        ConstructCmd::Permutation { images } => {
            let imgs: Vec<usize> = images
                .split_whitespace()
                .map(|t| t.parse::<usize>().map_err(|_| format!("bad image '{t}'")))
                .collect::<Result<_, _>>()?;
            let zero: Vec<usize> = imgs
                .iter()
                .map(|&x| x.checked_sub(1).ok_or("images are 1-based"))
                .collect::<Result<_, _>>()?;
            permutation_lq(&lq_core::Permutation::from_images(zero)?)
        }
        ConstructCmd::Conj { group, element } => {
            let g = load_group(group)?;
            let subset: Vec<usize> = match element {
                Some(e) => {
                    let x = e.checked_sub(1).filter(|&x| x < g.order());
                    g.conjugacy_class(x.ok_or("element out of range")?)
                }
                None => (0..g.order()).collect(),
            };
            conj_quandle(&g, &subset)?.0
        }
        ConstructCmd::GtTheta {
            group,
            t,
            theta_power,
        } => {
            let g = load_group(group)?;
            let theta = GroupMap::power_map(&g, *theta_power)?;
            gt_theta(&g, *t, &theta)?.0
        }
        ConstructCmd::Product { a, b } => load_table(a)?.direct_product(&load_table(b)?),
    };
    print_table(&q, format);
    Ok(Outcome::Pass)
}

fn cmd_quotient(q: &LeftQuasigroup, pairs: &str, format: Format) -> CliResult {
    let mut parsed: Vec<(usize, usize)> = Vec::new();
    for chunk in pairs.split([';', ' ']).filter(|s| !s.is_empty()) {
        let parts: Vec<&str> = chunk.split(',').collect();
        if parts.len() != 2 {
            return Err(format!("bad pair '{chunk}', expected 'a,b'").into());
        }
        let a: usize = parts[0].trim().parse().map_err(|_| "bad pair element")?;
        let b: usize = parts[1].trim().parse().map_err(|_| "bad pair element")?;
        if a == 0 || b == 0 || a > q.order() || b > q.order() {
            return Err(format!("pair '{chunk}' out of range (1-based)").into());
        }
        parsed.push((a - 1, b - 1));
    }
    let alpha = congruence::cgen(q, &parsed);
    let (factor, _) = q.quotient(&alpha)?;
    if format == Format::Text {
        let blocks: Vec<String> = one_based_blocks(&alpha)
            .iter()
            .map(|b| {
                let inner: Vec<String> = b.iter().map(|x| x.to_string()).collect();
                format!("{{{}}}", inner.join(","))
            })
            .collect();
        println!("# congruence: {}", blocks.join(" "));
    }
    print_table(&factor, format);
    Ok(Outcome::Pass)
}

fn cmd_iso(a: &LeftQuasigroup, b: &LeftQuasigroup, format: Format) -> CliResult {
    match a.isomorphism_to(b) {
        Some(map) => {
            let shown: Vec<usize> = map.iter().map(|x| x + 1).collect();
            match format {
                Format::Json => println!("{}", json!({"isomorphic": true, "map": shown})),
                Format::Text => println!("isomorphic: {shown:?}"),
            }
            Ok(Outcome::Pass)
        }
        None => {
            match format {
                Format::Json => println!("{}", json!({"isomorphic": false})),
                Format::Text => println!("not isomorphic"),
            }
            Ok(Outcome::Counterexample)
        }
    }
}
