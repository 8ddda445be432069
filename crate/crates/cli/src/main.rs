use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use quasihopf::dimodule::{check_long_dimodule, check_long_equation};
use quasihopf::galois::{all_families, check_lemma31, check_lemma32, check_reconstruction, check_theorem31_forward, reconstruct_hopf};
use quasihopf::hopf::{
    check_associator, check_hopf_axioms, check_lemma21, check_prop21, check_prop22, check_prop23, classification_report, classify_graded,
    linearity_probe,
};
use quasihopf::io::{
    canonical_json, dimodule_from_json, module_from_json, read_file, smash_from_json, smash_to_json, structure_from_json,
    structure_to_json, ModuleFile,
};
use quasihopf::quasigroup::{catalog, enumerate_ip_loops, PropertyFilter, CATALOG_NAMES, MAX_ENUMERATION_ORDER};
use quasihopf::quasimodule::{check_hopf_quasimodule, check_lemma41, check_modified_action, check_quasimodule, fundamental_theorem_check};
use quasihopf::report::{render, ReportFile, RunManifest};
use quasihopf::smash::{action_cocommutes, build_smash, check_quasimodule_hopf, check_theorem61, search_counterexample};
use quasihopf::{build_kq, CheckReport, Field, GradedHopfQuasigroup, Quasigroup};

/// Exact checks for quasigroup-graded Hopf quasigroups, their modules,
/// dimodules and smash products.
///
/// Exit status: 0 when every selected check passes, 1 when any fails,
/// 2 on unreadable or invalid input.
#[derive(Parser, Debug)]
#[command(name = "quasihopf", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    global: Global,
}

#[derive(Args, Debug)]
struct Global {
    /// Scalar field: `Q` or `F<p>` for a prime p. Inputs in another field are rejected.
    #[arg(long, global = true)]
    field: Option<Field>,
    /// Where to write JSON output: the report for checks, the built structure for `build` commands.
    #[arg(long, global = true, value_name = "OUT")]
    json: Option<PathBuf>,
    /// Worker threads for the checks.
    #[arg(long, global = true, value_name = "N")]
    parallel: Option<usize>,
    /// Seed for the randomized linearity probe.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Cayley tables of IP loops.
    #[command(subcommand)]
    Quasigroup(QuasigroupCmd),
    /// Graded Hopf quasigroup structures.
    #[command(subcommand)]
    Hopf(HopfCmd),
    /// Galois maps and antipode reconstruction.
    #[command(subcommand)]
    Galois(GaloisCmd),
    /// Graded quasimodules and Hopf quasimodules.
    #[command(subcommand)]
    Module(ModuleCmd),
    /// Long dimodules and the Long equation.
    #[command(subcommand)]
    Long(LongCmd),
    /// Smash products.
    #[command(subcommand)]
    Smash(SmashCmd),
    /// Report files.
    #[command(subcommand)]
    Report(ReportCmd),
}

#[derive(Subcommand, Debug)]
enum QuasigroupCmd {
    /// Validate a Cayley table (file or catalog name) and compare the Moufang forms.
    Check { table: String },
    /// List IP loops of one order up to isomorphism.
    Enumerate {
        #[arg(long)]
        order: usize,
        #[command(flatten)]
        filter: FilterArgs,
    },
}

#[derive(Args, Debug)]
struct FilterArgs {
    #[arg(long)]
    flexible: Option<bool>,
    #[arg(long)]
    alternative: Option<bool>,
    #[arg(long)]
    moufang: Option<bool>,
    #[arg(long)]
    commutative: Option<bool>,
    #[arg(long)]
    associative: Option<bool>,
}

#[derive(Subcommand, Debug)]
enum HopfCmd {
    /// Write the loop algebra kQ graded by Q.
    BuildKq { table: String },
    /// Run the axiom suite and a linearity probe.
    Check {
        structure: PathBuf,
        /// Also run the derived antipode identities.
        #[arg(long)]
        derived: bool,
    },
    /// Record which weakened associativity identities hold.
    Classify { structure: PathBuf },
    /// Check the associator identities (associative gradings only).
    Associator { structure: PathBuf },
}

#[derive(Subcommand, Debug)]
enum GaloisCmd {
    /// Almost (co)linearity of the Galois maps and the inverse identities.
    Check { structure: PathBuf },
    /// Rebuild the antipode from inverted Galois maps.
    Reconstruct {
        structure: PathBuf,
        /// Write the reconstructed structure here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand, Debug)]
enum ModuleCmd {
    /// Validate a (Hopf) quasimodule.
    Check { module: PathBuf },
    /// Check M ≅ H⊗M^coH and the modified action (needs a coaction).
    Fundamental { module: PathBuf },
}

#[derive(Subcommand, Debug)]
enum LongCmd {
    /// Validate a Long dimodule.
    Check { dimodule: PathBuf },
    /// Check R¹²R²³ = R²³R¹² for every grade.
    LongEq { dimodule: PathBuf },
}

#[derive(Subcommand, Debug)]
enum SmashCmd {
    /// Write the smash product A⋊H.
    Build { input: PathBuf },
    /// Validate the action and compare the smash product with the compatibility condition.
    Check { input: PathBuf },
    /// Exhaust small group-like actions looking for an incompatible one.
    SearchCounterexample {
        #[arg(long, default_value_t = 3)]
        max_dim: usize,
        /// Write the first incompatible action found as a smash input.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand, Debug)]
enum ReportCmd {
    /// Print a report file as a table.
    Render { report: PathBuf },
}

struct Session {
    command: String,
    global: Global,
}

impl Session {
    fn base_dir(path: &Path) -> &Path {
        path.parent().unwrap_or(Path::new("."))
    }

    fn field_or_default(&self) -> Field {
        self.global.field.unwrap_or(Field::Rational)
    }

    fn expect_field(&self, found: Field) -> Result<()> {
        match self.global.field {
            Some(want) if want != found => bail!("input is over {found} but --field {want} was requested"),
            _ => Ok(()),
        }
    }

    fn structure(&self, path: &Path) -> Result<GradedHopfQuasigroup> {
        let h = structure_from_json(&read_file(path)?).with_context(|| format!("loading {}", path.display()))?;
        self.expect_field(h.field())?;
        Ok(h)
    }

    fn write_output(&self, text: &str) -> Result<()> {
        match &self.global.json {
            Some(path) => std::fs::write(path, text).with_context(|| format!("writing {}", path.display())),
            None => {
                print!("{text}");
                Ok(())
            }
        }
    }

    /// Writes the report file if asked, prints the table, and returns whether everything passed.
    fn finish(&self, inputs: &[&Path], field: Field, reports: &[CheckReport]) -> Result<bool> {
        let manifest = RunManifest {
            command: self.command.clone(),
            inputs: inputs.iter().map(|p| p.display().to_string()).collect(),
            field: field.to_string(),
            suites: reports.iter().map(|r| r.suite.clone()).collect(),
            seed: self.global.seed,
            timestamp: chrono::Utc::now().to_rfc3339(),
        };
        let file = ReportFile::new(manifest, reports);
        let json = serde_json::to_string_pretty(&file)? + "\n";
        if let Some(path) = &self.global.json {
            std::fs::write(path, &json).with_context(|| format!("writing {}", path.display()))?;
        }
        print!("{}", render(&json)?);
        Ok(!file.failed())
    }
}

fn load_quasigroup(arg: &str) -> Result<Quasigroup> {
    let path = Path::new(arg);
    if path.exists() {
        return Quasigroup::parse_cayley(&read_file(path)?).with_context(|| format!("parsing {arg}"));
    }
    catalog(arg).map_err(|_| anyhow!("{arg} is neither a file nor a catalog name ({})", CATALOG_NAMES.join(", ")))
}

fn flag_names(f: &quasihopf::PropertyFlags) -> String {
    let names: Vec<&str> = [
        (f.flexible, "flexible"),
        (f.alternative, "alternative"),
        (f.moufang, "moufang"),
        (f.commutative, "commutative"),
        (f.associative, "associative"),
    ]
    .into_iter()
    .filter_map(|(on, name)| on.then_some(name))
    .collect();
    if names.is_empty() {
        "none".into()
    } else {
        names.join(" ")
    }
}

fn run(s: &Session, command: &Command) -> Result<bool> {
    match command {
        Command::Quasigroup(QuasigroupCmd::Check { table }) => {
            let q = load_quasigroup(table)?;
            println!("order {}: {}", q.order(), flag_names(&q.classify()));
            s.finish(&[Path::new(table)], s.field_or_default(), &[q.moufang_equivalence_check()])
        }
        Command::Quasigroup(QuasigroupCmd::Enumerate { order, filter }) => {
            if *order == 0 || *order > MAX_ENUMERATION_ORDER {
                bail!("--order must be between 1 and {MAX_ENUMERATION_ORDER}");
            }
            let filter = PropertyFilter {
                flexible: filter.flexible,
                alternative: filter.alternative,
                moufang: filter.moufang,
                commutative: filter.commutative,
                associative: filter.associative,
            };
            let loops = enumerate_ip_loops(*order, &filter)?;
            let mut text = format!("# {} IP loops of order {order}\n", loops.len());
            for (k, l) in loops.iter().enumerate() {
                text += &format!("# loop {k}: {}\n{}", flag_names(&l.classify()), l.to_cayley_text());
            }
            print!("{text}");
            if let Some(path) = &s.global.json {
                let tables: Vec<_> = loops.iter().map(|l| l.rows()).collect();
                let v = serde_json::json!({ "order": order, "count": loops.len(), "loops": tables });
                std::fs::write(path, canonical_json(&v)).with_context(|| format!("writing {}", path.display()))?;
            }
            Ok(true)
        }
        Command::Hopf(HopfCmd::BuildKq { table }) => {
            let q = load_quasigroup(table)?;
            s.write_output(&structure_to_json(&build_kq(&q, s.field_or_default())))?;
            Ok(true)
        }
        Command::Hopf(HopfCmd::Check { structure, derived }) => {
            let h = s.structure(structure)?;
            let mut reports = vec![check_hopf_axioms(&h), linearity_probe(&h, s.global.seed)];
            if *derived {
                reports.extend([check_prop21(&h), check_prop22(&h), check_prop23(&h), check_lemma21(&h)]);
            }
            s.finish(&[structure], h.field(), &reports)
        }
        Command::Hopf(HopfCmd::Classify { structure }) => {
            let h = s.structure(structure)?;
            let f = classify_graded(&h);
            println!(
                "flexible={} alternative={} moufang={} commutative={} cocommutative={}",
                f.flexible, f.alternative, f.moufang, f.commutative, f.cocommutative
            );
            s.finish(&[structure], h.field(), &[classification_report(&h)])
        }
        Command::Hopf(HopfCmd::Associator { structure }) => {
            let h = s.structure(structure)?;
            let r = check_associator(&h)?;
            s.finish(&[structure], h.field(), &[r])
        }
        Command::Galois(GaloisCmd::Check { structure }) => {
            let h = s.structure(structure)?;
            let families = all_families(&h)?;
            let reports = [check_lemma32(&h)?, check_lemma31(&h, &families), check_theorem31_forward(&h)?];
            s.finish(&[structure], h.field(), &reports)
        }
        Command::Galois(GaloisCmd::Reconstruct { structure, out }) => {
            let h = s.structure(structure)?;
            let r = check_reconstruction(&h)?;
            if let Some(out) = out {
                let rebuilt = reconstruct_hopf(&h)?;
                std::fs::write(out, structure_to_json(&rebuilt)).with_context(|| format!("writing {}", out.display()))?;
            }
            s.finish(&[structure], h.field(), &[r])
        }
        Command::Module(ModuleCmd::Check { module }) => {
            let m = module_from_json(&read_file(module)?, Session::base_dir(module))?;
            s.expect_field(m.base().field())?;
            let reports = match &m {
                ModuleFile::Quasi(q) => vec![check_quasimodule(q)],
                ModuleFile::Hopf(h) => vec![check_hopf_quasimodule(h), check_lemma41(h)],
            };
            s.finish(&[module], m.base().field(), &reports)
        }
        Command::Module(ModuleCmd::Fundamental { module }) => {
            let ModuleFile::Hopf(m) = module_from_json(&read_file(module)?, Session::base_dir(module))? else {
                bail!("{} has no coaction", module.display());
            };
            s.expect_field(m.field())?;
            let reports = [fundamental_theorem_check(&m)?, check_modified_action(&m)?];
            s.finish(&[module], m.field(), &reports)
        }
        Command::Long(cmd) => {
            let (path, eq) = match cmd {
                LongCmd::Check { dimodule } => (dimodule, false),
                LongCmd::LongEq { dimodule } => (dimodule, true),
            };
            let d = dimodule_from_json(&read_file(path)?, Session::base_dir(path))?;
            s.expect_field(d.field())?;
            let r = if eq { check_long_equation(&d) } else { check_long_dimodule(&d) };
            s.finish(&[path], d.field(), &[r])
        }
        Command::Smash(SmashCmd::Build { input }) => {
            let x = smash_from_json(&read_file(input)?, Session::base_dir(input))?;
            s.expect_field(x.field())?;
            s.write_output(&structure_to_json(&build_smash(&x)?))?;
            Ok(true)
        }
        Command::Smash(SmashCmd::Check { input }) => {
            let x = smash_from_json(&read_file(input)?, Session::base_dir(input))?;
            s.expect_field(x.field())?;
            let mut reports = vec![check_quasimodule_hopf(&x)];
            let cocommutes = action_cocommutes(&x);
            if cocommutes.holds() {
                reports.push(check_theorem61(&x)?);
            } else {
                let mut r = CheckReport::new("smash-hypothesis");
                r.record("action-cocommutes", "h₁⊗h₂·a = h₂⊗h₁·a", cocommutes);
                reports.push(r);
            }
            s.finish(&[input], x.field(), &reports)
        }
        Command::Smash(SmashCmd::SearchCounterexample { max_dim, out }) => {
            if *max_dim == 0 || *max_dim > 4 {
                bail!("--max-dim must be between 1 and 4");
            }
            let found = search_counterexample(*max_dim)?;
            println!("{:<6} {:<8} {:<8} {:>6} {:>12} {:>13}", "field", "grading", "algebra", "valid", "incompatible", "disagreements");
            for c in &found.cases {
                println!(
                    "{:<6} {:<8} {:<8} {:>6} {:>12} {:>13}",
                    c.field.to_string(),
                    format!("{}#{}", c.grading_order, c.grading_index),
                    format!("{}#{}", c.algebra_order, c.algebra_index),
                    c.valid_actions,
                    c.incompatible,
                    c.disagreements
                );
            }
            match &found.counterexample {
                Some(hit) => {
                    println!(
                        "first incompatible action: Q of order {}, L of order {}, over {}; smash product is a Hopf quasigroup: {}",
                        hit.grading.order(),
                        hit.algebra.order(),
                        hit.structure.field(),
                        hit.smash_is_hopf
                    );
                    if let Some(out) = out {
                        std::fs::write(out, smash_to_json(&hit.structure)).with_context(|| format!("writing {}", out.display()))?;
                    }
                }
                None => println!("no incompatible action at this scale"),
            }
            s.finish(&[], Field::Rational, &[found.to_report()])
        }
        Command::Report(ReportCmd::Render { report }) => {
            let text = read_file(report)?;
            print!("{}", render(&text)?);
            let file: ReportFile = serde_json::from_str(&text)?;
            Ok(!file.failed())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(2) } else { ExitCode::SUCCESS };
        }
    };
    if let Some(n) = cli.global.parallel {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    let session = Session { command: std::env::args().skip(1).collect::<Vec<_>>().join(" "), global: cli.global };
    match run(&session, &cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
