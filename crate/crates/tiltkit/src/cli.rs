//! Command-line workbench. Exit codes: 0 pass, 1 negative verdict, 2 error.

use std::ffi::OsString;
use std::fs;
use std::path::{Component, Path, PathBuf};

use anyhow::{anyhow, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use tiltkit_core::algebra::BasicAlgebra;
use tiltkit_core::complex::ProjComplex;
use tiltkit_core::module::{injective, is_isomorphic, projective, Representation};
use tiltkit_core::tilting::{
    check_iterated_nu_stable, check_simple_images, construct_tpq, end_algebra, maximal_nu_stable,
    presentations_match, stable_image, verify_tilting,
};
use tiltkit_core::{Config, Error};

use crate::format::{
    algebra_from_file, algebra_to_file, complex_from_file, complex_to_file, load_algebra, load_complex, load_module,
    module_from_file, module_to_file, to_json,
};
use crate::report::{
    alg_report, cartan_of, end_vertices, nust_report, nustable_report, relation_strings, stable_image_report,
    tilting_section, to_text, ConstructReport, EndalgReport, StableImageReport, VerifyReport,
};

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Text,
}

#[derive(Parser, Debug)]
#[command(name = "tiltkit", version, about = "Tilting complexes over bound quiver algebras")]
pub struct Cli {
    /// Seed for randomized searches.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Longest path considered when building an algebra.
    #[arg(long, global = true, default_value_t = 30)]
    pub max_path_len: usize,
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Json)]
    pub format: OutputFormat,
    /// Recompute results through an independent route and report agreement.
    #[arg(long, global = true)]
    pub recheck: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Algebra diagnostics.
    Alg {
        #[command(subcommand)]
        cmd: AlgCmd,
    },
    /// Projective-injectives, the Nakayama permutation and the maximal stable summand E.
    Nust { algebra: PathBuf },
    /// Construct or verify tilting complexes.
    Tilting {
        #[command(subcommand)]
        cmd: TiltingCmd,
    },
    /// Endomorphism algebra of a tilting complex.
    Endalg {
        algebra: PathBuf,
        complex: PathBuf,
        /// Write the presentation as an algebra file.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Decide whether a tilting complex is iterated stable.
    Nustable {
        #[command(subcommand)]
        cmd: NustableCmd,
    },
    /// Image of a module under the derived equivalence.
    StableImage { algebra: PathBuf, complex: PathBuf, module: PathBuf },
}

#[derive(Subcommand, Debug)]
pub enum AlgCmd {
    Check { algebra: PathBuf },
}

#[derive(Subcommand, Debug)]
pub enum NustableCmd {
    Check { algebra: PathBuf, complex: PathBuf },
}

#[derive(Args, Debug)]
pub struct ConstructArgs {
    pub algebra: PathBuf,
    /// Vertices of P, comma separated.
    #[arg(long = "p", value_delimiter = ',', num_args = 0..)]
    pub p: Vec<String>,
    /// Vertices of Q, comma separated.
    #[arg(long = "q", value_delimiter = ',', num_args = 0..)]
    pub q: Vec<String>,
    #[arg(short = 'r')]
    pub r: usize,
    #[arg(short = 's')]
    pub s: usize,
    /// Write the complex to this file.
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum TiltingCmd {
    Construct(ConstructArgs),
    Verify {
        algebra: PathBuf,
        complex: PathBuf,
        /// Treat the complex as produced by the construction.
        #[arg(long)]
        constructed: bool,
    },
}

/// Result of a command: the rendered report and its exit code.
pub struct Outcome {
    pub stdout: String,
    pub code: i32,
}

/// Runs the CLI on `args` (including the program name).
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            if code == 0 {
                return Outcome { stdout: text, code };
            }
            eprint!("{text}");
            return Outcome { stdout: String::new(), code };
        }
    };
    match execute(&cli) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e:#}");
            Outcome { stdout: String::new(), code: 2 }
        }
    }
}

fn config(cli: &Cli) -> Config {
    Config { seed: cli.seed, max_path_len: cli.max_path_len }
}

fn render<T: Serialize>(cli: &Cli, report: &T, pass: bool, recheck: Option<bool>) -> Outcome {
    let stdout = match cli.format {
        OutputFormat::Json => to_json(report),
        OutputFormat::Text => to_text(&serde_json::to_value(report).expect("serializable")),
    };
    let code = match (pass, recheck) {
        (_, Some(false)) => 2,
        (true, _) => 0,
        (false, _) => 1,
    };
    Outcome { stdout, code }
}

fn recheck_flag(cli: &Cli, f: impl FnOnce() -> anyhow::Result<bool>) -> anyhow::Result<Option<bool>> {
    if cli.recheck {
        f().map(Some)
    } else {
        Ok(None)
    }
}

fn vertices(a: &BasicAlgebra, names: &[String]) -> anyhow::Result<Vec<usize>> {
    names
        .iter()
        .filter(|n| !n.is_empty())
        .map(|n| a.quiver().vertex_index(n).ok_or_else(|| anyhow!("unknown vertex {n:?}")))
        .collect()
}

/// Path of `target` relative to the directory of `from`, falling back to `target` itself.
fn relative_ref(from: &Path, target: &Path) -> String {
    let abs = |p: &Path| -> Option<PathBuf> {
        if p.is_absolute() {
            Some(p.to_path_buf())
        } else {
            std::env::current_dir().ok().map(|d| d.join(p))
        }
    };
    let norm = |p: PathBuf| -> Vec<OsString> {
        let mut out: Vec<OsString> = Vec::new();
        for c in p.components() {
            match c {
                Component::ParentDir => {
                    out.pop();
                }
                Component::Normal(s) => out.push(s.to_os_string()),
                Component::RootDir => out.push(OsString::from("/")),
                Component::CurDir | Component::Prefix(_) => {}
            }
        }
        out
    };
    let (Some(from), Some(to)) = (abs(from), abs(target)) else {
        return target.display().to_string();
    };
    let mut base = norm(from);
    base.pop();
    let to_abs = to.clone();
    let to = norm(to);
    let common = base.iter().zip(to.iter()).take_while(|(a, b)| a == b).count();
    if common <= 1 {
        return to_abs.display().to_string();
    }
    let mut rel = PathBuf::new();
    for _ in common..base.len() {
        rel.push("..");
    }
    for c in &to[common..] {
        rel.push(c);
    }
    rel.to_string_lossy().replace('\\', "/")
}

fn write_file(path: &Path, text: &str) -> anyhow::Result<()> {
    fs::write(path, text).with_context(|| format!("writing {}", path.display()))
}

fn execute(cli: &Cli) -> anyhow::Result<Outcome> {
    let cfg = config(cli);
    match &cli.command {
        Command::Alg { cmd: AlgCmd::Check { algebra } } => {
            let a = load_algebra(algebra, cfg.max_path_len)?;
            let mut r = alg_report(&a);
            r.recheck = recheck_flag(cli, || {
                let again = algebra_from_file(&algebra_to_file(&a), cfg.max_path_len)?;
                Ok(again.dim() == a.dim() && presentations_match(&a, &again).is_some())
            })?;
            let rc = r.recheck;
            Ok(render(cli, &r, true, rc))
        }
        Command::Nust { algebra } => {
            let a = load_algebra(algebra, cfg.max_path_len)?;
            let nu = maximal_nu_stable(&a, &cfg);
            let mut r = nust_report(&a, &nu);
            r.recheck = recheck_flag(cli, || {
                let other = Config { seed: cfg.seed.wrapping_add(1), ..cfg };
                let again = maximal_nu_stable(&a, &other);
                let certified = nu.projectives.iter().all(|p| match p.nu_image {
                    Some(u) => is_isomorphic(&a, &injective(&a, p.vertex), &projective(&a, u), &other).is_some(),
                    None => true,
                });
                Ok(again.e == nu.e && certified)
            })?;
            let rc = r.recheck;
            Ok(render(cli, &r, true, rc))
        }
        Command::Tilting { cmd: TiltingCmd::Construct(args) } => construct(cli, &cfg, args),
        Command::Tilting { cmd: TiltingCmd::Verify { algebra, complex, constructed } } => {
            let a = load_algebra(algebra, cfg.max_path_len)?;
            let t = load_complex(&a, complex, algebra)?;
            let rep = match verify_tilting(&a, &t, *constructed, &cfg) {
                Ok(rep) => rep,
                Err(Error::NotRadical) => {
                    let r = VerifyReport { report: "tilting-verify", radical: false, tilting: None, recheck: None };
                    return Ok(render(cli, &r, false, None));
                }
                Err(e) => return Err(e.into()),
            };
            let section = tilting_section(&a, &rep);
            let pass = section.verdict;
            let recheck = recheck_flag(cli, || Ok(rep.decomposition.verify(&a, &t)))?;
            let r = VerifyReport { report: "tilting-verify", radical: true, tilting: Some(section), recheck };
            Ok(render(cli, &r, pass, recheck))
        }
        Command::Endalg { algebra, complex, output } => {
            let a = load_algebra(algebra, cfg.max_path_len)?;
            let t = load_complex(&a, complex, algebra)?;
            let end = end_algebra(&a, &t, &cfg)?;
            let b = end.algebra();
            let file = algebra_to_file(b);
            if let Some(out) = output {
                write_file(out, &to_json(&file))?;
            }
            let recheck = recheck_flag(cli, || {
                let again = algebra_from_file(&file, cfg.max_path_len)?;
                Ok(again.dim() == end.hom.dim() && presentations_match(b, &again).is_some())
            })?;
            let loewy = {
                let all: Vec<usize> = (0..b.num_vertices()).collect();
                tiltkit_core::module::loewy_layers(b, &tiltkit_core::module::projective_sum(b, &all)).len()
            };
            let r = EndalgReport {
                report: "endalg",
                dim: b.dim(),
                loewy_length: loewy,
                vertices: end_vertices(&a, b, &end.summands),
                cartan: cartan_of(b),
                relations: relation_strings(b),
                output: output.as_ref().map(|p| p.display().to_string()),
                algebra: file,
                recheck,
            };
            Ok(render(cli, &r, true, recheck))
        }
        Command::Nustable { cmd: NustableCmd::Check { algebra, complex } } => {
            let a = load_algebra(algebra, cfg.max_path_len)?;
            let t = load_complex(&a, complex, algebra)?;
            let nu = check_iterated_nu_stable(&a, &t, &cfg)?;
            let end = end_algebra(&a, &t, &cfg)?;
            let simples = check_simple_images(&a, &end, &cfg)?;
            let mut r = nustable_report(&a, &nu, &simples);
            r.recheck = recheck_flag(cli, || {
                let other = Config { seed: cfg.seed.wrapping_add(1), ..cfg };
                let again = check_iterated_nu_stable(&a, &t, &other)?;
                Ok(again.verdict == nu.verdict && r.criteria_agree)
            })?;
            let pass = r.verdict;
            let rc = r.recheck;
            Ok(render(cli, &r, pass, rc))
        }
        Command::StableImage { algebra, complex, module } => {
            let a = load_algebra(algebra, cfg.max_path_len)?;
            let t = load_complex(&a, complex, algebra)?;
            let x = load_module(&a, module, algebra)?;
            let end = end_algebra(&a, &t, &cfg)?;
            match stable_image(&a, &end, &x, &cfg) {
                Ok(cert) => {
                    let file = module_to_file(end.algebra(), &cert.module, None);
                    let recheck = recheck_flag(cli, || {
                        let again: Representation = module_from_file(end.algebra(), &file)?;
                        Ok(again.total_dim() == cert.hom_dim && again.dims() == cert.module.dims())
                    })?;
                    let mut r = stable_image_report(&cert, file);
                    r.recheck = recheck;
                    Ok(render(cli, &r, true, recheck))
                }
                Err(Error::NotConcentrated(profile)) => {
                    let r = StableImageReport {
                        report: "stable-image",
                        profile,
                        concentrated: false,
                        hom_dim: None,
                        module: None,
                        recheck: None,
                    };
                    Ok(render(cli, &r, false, None))
                }
                Err(e) => Err(e.into()),
            }
        }
    }
}

fn construct(cli: &Cli, cfg: &Config, args: &ConstructArgs) -> anyhow::Result<Outcome> {
    let a = load_algebra(&args.algebra, cfg.max_path_len)?;
    let p = vertices(&a, &args.p)?;
    let q = vertices(&a, &args.q)?;
    let c = construct_tpq(&a, &p, &q, args.r, args.s, cfg)?;
    let t: &ProjComplex = &c.complex;
    let rep = verify_tilting(&a, t, true, cfg)?;
    let algebra_ref = match &args.output {
        Some(out) => relative_ref(out, &args.algebra),
        None => args.algebra.display().to_string(),
    };
    let file = complex_to_file(&a, t, Some(algebra_ref));
    if let Some(out) = &args.output {
        write_file(out, &to_json(&file))?;
    }
    let recheck = recheck_flag(cli, || {
        let again = complex_from_file(&a, &file)?;
        let dims = tiltkit_core::tilting::self_orthogonality(&a, &again);
        Ok(again.is_radical(&a) && dims == rep.hom_dims && c.decomposition.verify(&a, &c.raw))
    })?;
    let section = tilting_section(&a, &rep);
    let pass = section.verdict;
    let r = ConstructReport {
        report: "tilting-construct",
        p: crate::report::names(&a, &p),
        q: crate::report::names(&a, &q),
        r: args.r,
        s: args.s,
        output: args.output.as_ref().map(|p| p.display().to_string()),
        tilting: section,
        complex: file,
        recheck,
    };
    Ok(render(cli, &r, pass, recheck))
}
