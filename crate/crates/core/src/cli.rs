//! The `graphprod` command line.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use rand::seq::IteratorRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::automorphisms::{Automorphism, AutomorphismFile, VertexMap};
use crate::error::{Error, Result};
use crate::generators::{
    check_generators_in_whitehead, generating_set, generator_from_descriptor, star_generating_set, subgroup_one_set,
    whitehead_type_i, Generator, GeneratorDescriptor, WhiteheadCoverage,
};
use crate::labeled_graph::LabeledGraph;
use crate::oracle::enumerate_ball;
use crate::words::GraphProduct;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Which {
    All,
    Star,
    One,
    Whitehead,
}

#[derive(Debug, Parser)]
#[command(name = "graphprod", version, about = "Graph products of cyclic groups and their automorphisms")]
pub struct Cli {
    /// Graph description (JSON)
    #[arg(long, global = true)]
    pub graph: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    /// Maximum word length for `decompose`
    #[arg(long, default_value_t = 8, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    pub depth: u64,
    /// Ball radius for `ball`
    #[arg(long, default_value_t = 4, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    pub radius: u64,
    /// Seed for sampled output
    #[arg(long, default_value_t = 0, global = true)]
    pub seed: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the canonical form of a word
    Normalize { word: String },
    /// Print generators of the centralizer of an element
    Centralizer { word: String },
    /// Print the rank of an element
    Rank { word: String },
    /// List a generating set of the automorphism group
    Generators {
        #[arg(value_enum, default_value_t = Which::All)]
        which: Which,
    },
    /// Apply an automorphism to a word
    Apply { automorphism: PathBuf, word: String },
    /// Report well-definedness and the classification of an automorphism
    Check { automorphism: PathBuf },
    /// Write an automorphism as a product of generators
    Decompose {
        automorphism: PathBuf,
        /// JSON array of generator descriptors to use instead of the full generating set
        #[arg(long)]
        generators: Option<PathBuf>,
    },
    /// Count the elements of a ball in the Cayley graph
    Ball,
}

/// A command result: typed JSON plus a text rendering. `found` is false
/// for searches that came back empty.
#[derive(Clone, Debug, PartialEq)]
pub struct Report {
    pub json: String,
    pub text: String,
    pub found: bool,
}

impl Report {
    fn new<T: Serialize>(value: &T, text: String) -> Self {
        Report { json: serde_json::to_string(value).expect("outputs serialize"), text, found: true }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NormalizeOutput {
    pub word: String,
    pub length: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorOutput {
    pub root: String,
    pub exponent: u64,
    pub unique: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CentralizerOutput {
    pub whole_group: bool,
    pub conjugator: String,
    pub factors: Vec<FactorOutput>,
    pub link: Vec<String>,
    pub generators: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RankOutput {
    pub rank: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorOutput {
    pub descriptors: Vec<GeneratorDescriptor>,
    pub images: BTreeMap<String, String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorsOutput {
    pub which: Which,
    pub count: usize,
    pub generators: Vec<GeneratorOutput>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub covered: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckOutput {
    pub well_defined: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    pub conjugating_set: Vec<String>,
    pub simple_set: Vec<String>,
    pub quasi_simple: bool,
    pub induced_graph_automorphism: BTreeMap<String, String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecomposeOutput {
    pub found: bool,
    pub depth: u64,
    /// Letters `g` or `g^-1` for generator labels `g`, leftmost applied last.
    pub word: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BallOutput {
    pub radius: u64,
    pub size: usize,
    pub spheres: Vec<usize>,
    pub sample: Vec<String>,
}

pub fn load_group(path: &Path) -> Result<GraphProduct> {
    let text = fs::read_to_string(path).map_err(|e| Error::Json(format!("{}: {e}", path.display())))?;
    Ok(GraphProduct::new(LabeledGraph::from_json(&text)?))
}

fn load_automorphism_file(path: &Path) -> Result<AutomorphismFile> {
    let text = fs::read_to_string(path).map_err(|e| Error::Json(format!("{}: {e}", path.display())))?;
    Ok(serde_json::from_str(&text)?)
}

fn images(group: &GraphProduct, m: &VertexMap) -> BTreeMap<String, String> {
    group.graph().vertices().map(|v| (group.graph().name(v).to_owned(), group.render(&m.images[v]))).collect()
}

fn label(g: &Generator) -> String {
    g.descriptors[0].to_string()
}

pub fn cmd_normalize(group: &GraphProduct, word: &str) -> Result<Report> {
    let g = group.parse(word)?;
    let out = NormalizeOutput { word: group.render(&g), length: group.length(&g) };
    Ok(Report::new(&out, out.word.clone()))
}

pub fn cmd_centralizer(group: &GraphProduct, word: &str) -> Result<Report> {
    let g = group.parse(word)?;
    let c = group.centralizer(&g)?;
    let graph = group.graph();
    let link = graph.names_of(c.link_vertices);
    let generators: Vec<String> = c.generators(group).iter().map(|h| group.render(h)).collect();
    if c.whole_group {
        let out = CentralizerOutput { whole_group: true, conjugator: "1".into(), factors: vec![], link, generators };
        return Ok(Report::new(&out, "whole group".into()));
    }
    let (w, u) = group.cyclically_reduce(&g);
    let form = group.basic_form(&u)?;
    let factors: Vec<FactorOutput> = form
        .factors
        .iter()
        .map(|f| FactorOutput {
            root: group.render(&f.root),
            exponent: f.exponent,
            unique: group.root(&group.power(&f.root, f.exponent as i64)).map(|r| r.unique).unwrap_or(true),
        })
        .collect();
    let mut text = String::new();
    text.push_str(&format!("conjugator: {}\n", group.render(&w)));
    let shown: Vec<String> = factors.iter().map(|f| format!("({})^{}", f.root, f.exponent)).collect();
    text.push_str(&format!("basic form: {}\n", shown.join(" ")));
    text.push_str(&format!("link: {{{}}}\n", link.join(", ")));
    text.push_str(&format!("generators: {}", generators.join(", ")));
    let out = CentralizerOutput { whole_group: false, conjugator: group.render(&w), factors, link, generators };
    Ok(Report::new(&out, text))
}

pub fn cmd_rank(group: &GraphProduct, word: &str) -> Result<Report> {
    let rank = group.rank(&group.parse(word)?)?;
    Ok(Report::new(&RankOutput { rank }, rank.to_string()))
}

pub fn cmd_generators(group: &GraphProduct, which: Which) -> Result<Report> {
    let mut covered = None;
    let gens = match which {
        Which::All => generating_set(group),
        Which::Star => star_generating_set(group),
        Which::One => subgroup_one_set(group),
        Which::Whitehead => {
            let coverage: WhiteheadCoverage = check_generators_in_whitehead(group)?;
            covered = Some(coverage.all_covered());
            whitehead_type_i(group)
        }
    };
    let generators: Vec<GeneratorOutput> = gens
        .iter()
        .map(|g| GeneratorOutput { descriptors: g.descriptors.clone(), images: images(group, &g.automorphism.forward) })
        .collect();
    let mut text: Vec<String> = generators
        .iter()
        .map(|g| {
            let moved: Vec<String> = g
                .images
                .iter()
                .filter(|(v, w)| v != w)
                .map(|(v, w)| format!("{v} -> {w}"))
                .collect();
            format!("{}: {}", g.descriptors[0], moved.join(", "))
        })
        .collect();
    text.push(format!("{} generators", generators.len()));
    if let Some(c) = covered {
        text.push(format!("every generator is a Whitehead automorphism: {c}"));
    }
    let out = GeneratorsOutput { which, count: generators.len(), generators, covered };
    Ok(Report::new(&out, text.join("\n")))
}

pub fn cmd_apply(group: &GraphProduct, automorphism: &Path, word: &str) -> Result<Report> {
    let auto = group.automorphism_from_file(&load_automorphism_file(automorphism)?)?;
    let out = NormalizeOutput { word: group.render(&group.apply(&auto, &group.parse(word)?)), length: 0 };
    let out = NormalizeOutput { length: group.length(&group.parse(&out.word)?), ..out };
    Ok(Report::new(&out, out.word.clone()))
}

pub fn cmd_check(group: &GraphProduct, automorphism: &Path) -> Result<Report> {
    let (forward, inverse) = group.vertex_maps_from_file(&load_automorphism_file(automorphism)?)?;
    let graph = group.graph();
    let out = match group.automorphism(forward.clone(), inverse) {
        Ok(auto) => {
            let gamma = group.induced_graph_automorphism(&auto)?;
            CheckOutput {
                well_defined: true,
                witness: None,
                conjugating_set: graph.names_of(group.conjugating_set(&auto)),
                simple_set: graph.names_of(group.simple_set(&auto)),
                quasi_simple: group.is_quasi_simple(&auto),
                induced_graph_automorphism: graph
                    .vertices()
                    .map(|v| (graph.name(v).to_owned(), graph.name(gamma.apply(v)).to_owned()))
                    .collect(),
            }
        }
        Err(e) => CheckOutput {
            well_defined: false,
            witness: Some(match (group.is_well_defined(&forward), e) {
                (Err(w), _) => w.to_string(),
                (Ok(()), e) => e.to_string(),
            }),
            conjugating_set: vec![],
            simple_set: vec![],
            quasi_simple: false,
            induced_graph_automorphism: BTreeMap::new(),
        },
    };
    let text = if out.well_defined {
        let gamma: Vec<String> = out.induced_graph_automorphism.iter().map(|(a, b)| format!("{a}->{b}")).collect();
        format!(
            "well-defined: true\nconjugating set: {{{}}}\nsimple set: {{{}}}\nquasi-simple: {}\ninduced graph automorphism: {}",
            out.conjugating_set.join(", "),
            out.simple_set.join(", "),
            out.quasi_simple,
            gamma.join(", ")
        )
    } else {
        format!("well-defined: false\nwitness: {}", out.witness.clone().unwrap_or_default())
    };
    Ok(Report::new(&out, text))
}

pub fn cmd_decompose(group: &GraphProduct, automorphism: &Path, generators: Option<&Path>, depth: u64) -> Result<Report> {
    let target: Automorphism = group.automorphism_from_file(&load_automorphism_file(automorphism)?)?;
    let gens: Vec<Generator> = match generators {
        Some(path) => {
            let text = fs::read_to_string(path).map_err(|e| Error::Json(format!("{}: {e}", path.display())))?;
            let descriptors: Vec<GeneratorDescriptor> = serde_json::from_str(&text)?;
            descriptors.iter().map(|d| generator_from_descriptor(group, d)).collect::<Result<_>>()?
        }
        None => generating_set(group),
    };
    let autos: Vec<Automorphism> = gens.iter().map(|g| g.automorphism.clone()).collect();
    let found = group.decompose_over_generators(&target, &autos, depth as usize);
    let word: Vec<String> = found
        .iter()
        .flatten()
        .map(|s| if s.inverse { format!("{}^-1", label(&gens[s.index])) } else { label(&gens[s.index]) })
        .collect();
    let out = DecomposeOutput { found: found.is_some(), depth, word };
    let text = match &found {
        Some(w) if w.is_empty() => "identity".to_owned(),
        Some(_) => out.word.join(" . "),
        None => format!("not found at depth <= {depth}"),
    };
    let mut report = Report::new(&out, text);
    report.found = out.found;
    Ok(report)
}

pub fn cmd_ball(group: &GraphProduct, radius: u64, seed: u64) -> Result<Report> {
    let ball = enumerate_ball(group, radius);
    let mut spheres = vec![0; radius as usize + 1];
    for &d in ball.distance.values() {
        spheres[d as usize] += 1;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut sample: Vec<String> = ball.elements().choose_multiple(&mut rng, 5).into_iter().map(|g| group.render(g)).collect();
    sample.sort();
    let out = BallOutput { radius, size: ball.len(), spheres, sample };
    let text = format!("{} elements of length at most {radius}", out.size);
    Ok(Report::new(&out, text))
}

fn dispatch(cli: &Cli) -> Result<Report> {
    let path = cli.graph.as_deref().ok_or_else(|| Error::Json("--graph <path> is required".into()))?;
    let group = load_group(path)?;
    log::debug!("loaded graph with {} vertices", group.graph().len());
    match &cli.command {
        Command::Normalize { word } => cmd_normalize(&group, word),
        Command::Centralizer { word } => cmd_centralizer(&group, word),
        Command::Rank { word } => cmd_rank(&group, word),
        Command::Generators { which } => cmd_generators(&group, *which),
        Command::Apply { automorphism, word } => cmd_apply(&group, automorphism, word),
        Command::Check { automorphism } => cmd_check(&group, automorphism),
        Command::Decompose { automorphism, generators } => {
            cmd_decompose(&group, automorphism, generators.as_deref(), cli.depth)
        }
        Command::Ball => cmd_ball(&group, cli.radius, cli.seed),
    }
}

/// Runs the command line and returns the exit code: 0 on success, 1 on bad
/// input, 2 when a search finds nothing.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = if code == 0 { write!(out, "{e}") } else { write!(err, "{e}") };
            return code;
        }
    };
    match dispatch(&cli) {
        Ok(report) => {
            let shown = match cli.format {
                Format::Json => report.json.clone(),
                Format::Text => report.text.clone(),
            };
            let _ = writeln!(out, "{shown}");
            if report.found {
                0
            } else {
                2
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}
