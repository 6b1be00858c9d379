mod input;

use anyhow::{bail, Context};
use bigraded::constructions::{
    diagonal_presentation, rees_presentation, segre_product, strand_module,
    symmetric_algebra_presentation, symmetric_quadratic_basis, tensor_product, veronese_subring,
    AlgebraPresentation, DiagonalMode, DiagonalSpec,
};
use bigraded::graded::GradedModulePresentation;
use bigraded::groebner::{generic_initial_ideal, is_groebner_basis, normal_form};
use bigraded::resolution::{betti, koszul_test, linearity_test, regularity};
use bigraded::semigroup::{cm_scan, semigroup_diagonal, CmSummary};
use bigraded::{Bidegree, RingPresentation};
use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};
use std::collections::HashMap;
use std::path::{Path, PathBuf};
use std::sync::Arc;

#[derive(Parser)]
#[command(
    name = "bigraded",
    about = "Exact computations with standard bigraded algebras over prime fields",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct OutputOpts {
    /// emit a JSON report instead of text
    #[arg(long)]
    json: bool,
    /// write the report to a file instead of stdout
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args, Clone)]
struct DiagonalOpts {
    #[arg(long)]
    a: u32,
    #[arg(long)]
    b: u32,
    /// delta (single-graded diagonal) or tilde (bigraded family)
    #[arg(long, default_value = "delta")]
    mode: String,
}

impl DiagonalOpts {
    fn spec(&self) -> anyhow::Result<DiagonalSpec> {
        let mode = match self.mode.as_str() {
            "delta" => DiagonalMode::Delta,
            "tilde" => DiagonalMode::Tilde,
            other => bail!("unknown mode '{other}' (expected delta or tilde)"),
        };
        Ok(DiagonalSpec::new(self.a, self.b, mode)?)
    }
}

#[derive(Subcommand)]
enum Command {
    /// Reduced Groebner basis of the ring's defining ideal
    Gb {
        ring: PathBuf,
        #[command(flatten)]
        out: OutputOpts,
    },
    /// Normal form of a polynomial modulo the defining ideal
    Nf {
        ring: PathBuf,
        polynomial: String,
        #[command(flatten)]
        out: OutputOpts,
    },
    /// Randomized generic initial ideal of the defining ideal (x-block)
    Gin {
        ring: PathBuf,
        #[arg(long, default_value_t = 5)]
        trials: usize,
        #[arg(long, default_value_t = 12345)]
        seed: u64,
        #[command(flatten)]
        out: OutputOpts,
    },
    /// Diagonal subalgebra or generalized Veronese presentation
    Diag {
        ring: PathBuf,
        #[command(flatten)]
        diag: DiagonalOpts,
        #[command(flatten)]
        out: OutputOpts,
    },
    /// Strand module of the ring along a diagonal
    Strand {
        ring: PathBuf,
        #[command(flatten)]
        diag: DiagonalOpts,
        #[arg(long, default_value_t = 0)]
        c: u32,
        #[arg(long, default_value_t = 0)]
        d: u32,
        #[arg(long, default_value_t = 8)]
        max_deg: u32,
        #[command(flatten)]
        out: OutputOpts,
    },
    /// Betti table of a standard module over the ring
    Betti {
        ring: PathBuf,
        /// k (residue field), m (maximal ideal), nx or ny (variable blocks)
        #[arg(long, default_value = "k")]
        module: String,
        #[arg(long, default_value_t = 4)]
        max_i: u32,
        #[arg(long, default_value_t = 8)]
        max_deg: u32,
        #[command(flatten)]
        out: OutputOpts,
    },
    /// Regularity report for a standard module
    Reg {
        ring: PathBuf,
        #[arg(long, default_value = "k")]
        module: String,
        #[arg(long, default_value_t = 4)]
        max_i: u32,
        #[arg(long, default_value_t = 8)]
        max_deg: u32,
        #[command(flatten)]
        out: OutputOpts,
    },
    /// Koszulness verdict; exits 2 when certified non-Koszul
    Koszul {
        ring: PathBuf,
        #[arg(long, default_value_t = 4)]
        max_i: u32,
        #[command(flatten)]
        out: OutputOpts,
    },
    /// Linearity check for a strand module of the ring
    Linearity {
        ring: PathBuf,
        #[command(flatten)]
        diag: DiagonalOpts,
        #[arg(long, default_value_t = 0)]
        c: u32,
        #[arg(long, default_value_t = 0)]
        d: u32,
        #[arg(long, default_value_t = 0)]
        expected: u32,
        #[arg(long, default_value_t = 3)]
        max_i: u32,
        #[command(flatten)]
        out: OutputOpts,
    },
    /// Symmetric algebra of the maximal ideal of a single-graded ring
    Sym {
        ring: PathBuf,
        /// also build the explicit quadratic basis through the stability
        /// pipeline and check it with Buchberger's criterion
        #[arg(long)]
        quadratic_basis: bool,
        #[arg(long, default_value_t = 12345)]
        seed: u64,
        #[arg(long, default_value_t = 8)]
        rel_bound: u32,
        #[command(flatten)]
        out: OutputOpts,
    },
    /// Rees algebra of an ideal (default: the maximal ideal)
    Rees {
        ring: PathBuf,
        /// file with one ideal generator per line
        ideal: Option<PathBuf>,
        #[command(flatten)]
        out: OutputOpts,
    },
    /// Tensor, Segre or Veronese product
    Product {
        #[arg(long)]
        kind: String,
        first: PathBuf,
        second: Option<PathBuf>,
        #[arg(long)]
        d: Option<u32>,
        #[command(flatten)]
        out: OutputOpts,
    },
    /// Cohen-Macaulay scan of divisor-poset intervals; exits 2 on a non-CM
    /// interval
    SemigroupCm {
        semigroup: PathBuf,
        #[arg(long, default_value_t = 3)]
        max_deg: u32,
        #[command(flatten)]
        out: OutputOpts,
    },
    /// Diagonal of a bigraded semigroup
    SemigroupDiag {
        semigroup: PathBuf,
        #[command(flatten)]
        diag: DiagonalOpts,
        #[command(flatten)]
        out: OutputOpts,
    },
}

fn read_ring(path: &Path) -> anyhow::Result<Arc<RingPresentation>> {
    let text =
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    Ok(input::parse_ring(&text)?)
}

fn var_map(ring: &RingPresentation) -> HashMap<String, usize> {
    ring.ambient()
        .var_names()
        .iter()
        .enumerate()
        .map(|(i, n)| (n.clone(), i))
        .collect()
}

fn emit(out: &OutputOpts, human: String, value: Value) -> anyhow::Result<()> {
    let text = if out.json {
        format!("{}\n", serde_json::to_string_pretty(&value)?)
    } else {
        human
    };
    match &out.output {
        Some(path) => std::fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn presentation_report(label: &str, alg: &AlgebraPresentation) -> (String, Value) {
    let amb = alg.ring.ambient();
    let samb = alg.source.ambient();
    let mut human = format!("{label}\n");
    human.push_str(&input::serialize_ring(&alg.ring));
    human.push_str("segments\n");
    for (v, img) in alg.segment_map.iter().enumerate() {
        human.push_str(&format!(
            "{} -> {}\n",
            amb.var_names()[v],
            samb.poly_to_string(img)
        ));
    }
    let value = json!({
        "command": label,
        "ring": input::serialize_ring(&alg.ring),
        "segments": alg
            .segment_map
            .iter()
            .enumerate()
            .map(|(v, img)| json!({
                "variable": amb.var_names()[v],
                "image": samb.poly_to_string(img),
            }))
            .collect::<Vec<_>>(),
    });
    (human, value)
}

fn standard_module(
    ring: &Arc<RingPresentation>,
    which: &str,
    rel_bound: u32,
) -> anyhow::Result<GradedModulePresentation> {
    let amb = ring.ambient();
    let n = ring.n();
    let m = ring.m();
    Ok(match which {
        "k" => GradedModulePresentation::residue_field(ring.clone()),
        "m" => {
            let gens: Vec<_> = (0..n + m).map(|v| amb.var_poly(v)).collect();
            GradedModulePresentation::ideal_module(ring.clone(), &gens, rel_bound)?
        }
        "nx" => {
            let gens: Vec<_> = (0..n).map(|v| amb.var_poly(v)).collect();
            GradedModulePresentation::ideal_module(ring.clone(), &gens, rel_bound)?
        }
        "ny" => {
            let gens: Vec<_> = (n..n + m).map(|v| amb.var_poly(v)).collect();
            GradedModulePresentation::ideal_module(ring.clone(), &gens, rel_bound)?
        }
        other => bail!("unknown module '{other}' (expected k, m, nx or ny)"),
    })
}

fn run(cli: Cli) -> anyhow::Result<i32> {
    match cli.command {
        Command::Gb { ring, out } => {
            let r = read_ring(&ring)?;
            let gb = r.groebner_basis();
            let amb = r.ambient();
            let gens: Vec<String> = gb
                .generators()
                .iter()
                .map(|g| amb.poly_to_string(g))
                .collect();
            let human = gens.iter().fold(String::new(), |mut s, g| {
                s.push_str(g);
                s.push('\n');
                s
            });
            emit(&out, human, json!({"command": "gb", "generators": gens}))?;
            Ok(0)
        }
        Command::Nf {
            ring,
            polynomial,
            out,
        } => {
            let r = read_ring(&ring)?;
            let f = input::parse_polynomial(r.ambient(), &var_map(&r), &polynomial, 1)?;
            let nf = normal_form(r.ambient(), &f, r.groebner_basis());
            let s = r.ambient().poly_to_string(&nf);
            emit(&out, format!("{s}\n"), json!({"command": "nf", "normal_form": s}))?;
            Ok(0)
        }
        Command::Gin {
            ring,
            trials,
            seed,
            out,
        } => {
            let r = read_ring(&ring)?;
            let outcome = generic_initial_ideal(r.ambient(), r.relations(), trials, seed)?;
            let amb = r.ambient();
            let gens: Vec<String> = outcome
                .ideal
                .generators()
                .iter()
                .map(|m| amb.poly_to_string(&amb.polynomial(vec![(m.clone(), 1)])))
                .collect();
            let human = format!("gin (seed {seed}, {trials} trials): {}\n", gens.join(", "));
            emit(
                &out,
                human,
                json!({"command": "gin", "seed": seed, "trials": trials, "generators": gens}),
            )?;
            Ok(0)
        }
        Command::Diag { ring, diag, out } => {
            let r = read_ring(&ring)?;
            let alg = diagonal_presentation(&r, diag.spec()?)?;
            let (human, value) = presentation_report("diag", &alg);
            emit(&out, human, value)?;
            Ok(0)
        }
        Command::Strand {
            ring,
            diag,
            c,
            d,
            max_deg,
            out,
        } => {
            let r = read_ring(&ring)?;
            let spec = diag.spec()?;
            let alg = diagonal_presentation(&r, spec)?;
            let rmod = GradedModulePresentation::free(r.clone(), vec![Bidegree::ZERO]);
            let strand = strand_module(&alg, &rmod, Bidegree::new(c, d), max_deg, max_deg)?;
            let damb = alg.ring.ambient();
            let gens: Vec<String> = strand
                .generator_shifts
                .iter()
                .map(|s| format!("({s})"))
                .collect();
            let rels: Vec<Vec<String>> = strand
                .columns
                .iter()
                .map(|col| col.iter().map(|p| damb.poly_to_string(p)).collect())
                .collect();
            let human = format!(
                "generators: {}\nrelations: {}\n",
                gens.join(" "),
                rels.iter()
                    .map(|c| format!("[{}]", c.join(", ")))
                    .collect::<Vec<_>>()
                    .join(" ")
            );
            emit(
                &out,
                human,
                json!({
                    "command": "strand",
                    "generator_shifts": gens,
                    "relation_columns": rels,
                    "gen_bound": max_deg,
                    "rel_bound": max_deg,
                }),
            )?;
            Ok(0)
        }
        Command::Betti {
            ring,
            module,
            max_i,
            max_deg,
            out,
        } => {
            let r = read_ring(&ring)?;
            let m = standard_module(&r, &module, max_deg)?;
            let table = betti(&m, max_i, max_deg)?;
            let ser = table.serializable();
            let mut human = format!("betti table (max_i {max_i}, max_deg {max_deg})\n");
            for e in &ser.entries {
                human.push_str(&format!("i={} ({},{}) dim {}\n", e.i, e.j, e.k, e.dim));
            }
            emit(&out, human, json!({"command": "betti", "module": module, "table": ser}))?;
            Ok(0)
        }
        Command::Reg {
            ring,
            module,
            max_i,
            max_deg,
            out,
        } => {
            let r = read_ring(&ring)?;
            let m = standard_module(&r, &module, max_deg)?;
            let table = betti(&m, max_i, max_deg)?;
            let rep = regularity(&table);
            let human = format!(
                "reg {:?} (truncated: {}), indeg {:?}, rate {:?}\n",
                rep.reg, rep.reg_truncated, rep.indeg, rep.rate
            );
            emit(&out, human, json!({"command": "reg", "module": module, "report": rep}))?;
            Ok(0)
        }
        Command::Koszul { ring, max_i, out } => {
            let r = read_ring(&ring)?;
            let verdict = koszul_test(&r, max_i)?;
            let human = format!("{verdict:?}\n");
            let code = if verdict.is_certified_non_koszul() { 2 } else { 0 };
            emit(&out, human, json!({"command": "koszul", "verdict": verdict}))?;
            Ok(code)
        }
        Command::Linearity {
            ring,
            diag,
            c,
            d,
            expected,
            max_i,
            out,
        } => {
            let r = read_ring(&ring)?;
            let spec = diag.spec()?;
            let alg = diagonal_presentation(&r, spec)?;
            let rmod = GradedModulePresentation::free(r.clone(), vec![Bidegree::ZERO]);
            let bound = max_i + expected + 1;
            let strand = strand_module(&alg, &rmod, Bidegree::new(c, d), bound, bound)?;
            let rep = linearity_test(&strand, expected, max_i)?;
            let human = format!("linear: {} (witness {:?})\n", rep.linear, rep.witness);
            let code = if rep.linear { 0 } else { 2 };
            emit(&out, human, json!({"command": "linearity", "report": rep}))?;
            Ok(code)
        }
        Command::Sym {
            ring,
            quadratic_basis,
            seed,
            rel_bound,
            out,
        } => {
            let r = read_ring(&ring)?;
            let m = standard_module(&r, "m", rel_bound)?;
            let sym = symmetric_algebra_presentation(&r, &m)?;
            let mut human = input::serialize_ring(&sym);
            let mut value = json!({"command": "sym", "ring": input::serialize_ring(&sym)});
            if quadratic_basis {
                // straighten the defining ideal first when it is not already
                // a stable quadratic Groebner basis
                let stable = symmetric_quadratic_basis(&r);
                let (big, basis, transformed) = match stable {
                    Ok((big, basis)) => (big, basis, false),
                    Err(_) => {
                        let gin = generic_initial_ideal(r.ambient(), r.relations(), 5, seed)?;
                        let changed: Vec<_> = r
                            .relations()
                            .iter()
                            .map(|g| r.ambient().substitute(g, &gin.change))
                            .collect();
                        let r2 = Arc::new(RingPresentation::new(r.ambient().clone(), changed)?);
                        let (big, basis) = symmetric_quadratic_basis(&r2)?;
                        (big, basis, true)
                    }
                };
                let ok = is_groebner_basis(&big, &basis);
                let basis_strings: Vec<String> =
                    basis.iter().map(|p| big.poly_to_string(p)).collect();
                human.push_str(&format!(
                    "quadratic basis ({} elements, coordinates changed: {transformed}): groebner = {ok}\n",
                    basis.len()
                ));
                value["quadratic_basis"] = json!({
                    "elements": basis_strings,
                    "is_groebner_basis": ok,
                    "coordinates_changed": transformed,
                    "seed": seed,
                });
                if !ok {
                    emit(&out, human, value)?;
                    return Ok(2);
                }
            }
            emit(&out, human, value)?;
            Ok(0)
        }
        Command::Rees { ring, ideal, out } => {
            let r = read_ring(&ring)?;
            let gens = match ideal {
                Some(path) => {
                    let text = std::fs::read_to_string(&path)
                        .with_context(|| format!("reading {}", path.display()))?;
                    let vars = var_map(&r);
                    let mut gens = vec![];
                    for (ln, line) in text.lines().enumerate() {
                        let line = line.trim();
                        if line.is_empty() || line.starts_with('#') {
                            continue;
                        }
                        gens.push(input::parse_polynomial(r.ambient(), &vars, line, ln + 1)?);
                    }
                    gens
                }
                None => (0..r.n()).map(|v| r.ambient().var_poly(v)).collect(),
            };
            let alg = rees_presentation(&r, &gens)?;
            let (human, value) = presentation_report("rees", &alg);
            emit(&out, human, value)?;
            Ok(0)
        }
        Command::Product {
            kind,
            first,
            second,
            d,
            out,
        } => {
            let a = read_ring(&first)?;
            match kind.as_str() {
                "tensor" => {
                    let b = read_ring(second.as_deref().context("tensor needs two rings")?)?;
                    let t = tensor_product(&a, &b)?;
                    let text = input::serialize_ring(&t);
                    emit(
                        &out,
                        text.clone(),
                        json!({"command": "product", "kind": "tensor", "ring": text}),
                    )?;
                }
                "segre" => {
                    let b = read_ring(second.as_deref().context("segre needs two rings")?)?;
                    let alg = segre_product(&a, &b)?;
                    let (human, value) = presentation_report("segre", &alg);
                    emit(&out, human, value)?;
                }
                "veronese" => {
                    let d = d.context("veronese needs --d")?;
                    let alg = veronese_subring(&a, d)?;
                    let (human, value) = presentation_report("veronese", &alg);
                    emit(&out, human, value)?;
                }
                other => bail!("unknown product kind '{other}'"),
            }
            Ok(0)
        }
        Command::SemigroupCm {
            semigroup,
            max_deg,
            out,
        } => {
            let text = std::fs::read_to_string(&semigroup)
                .with_context(|| format!("reading {}", semigroup.display()))?;
            let s = input::parse_semigroup(&text)?;
            let field = bigraded::PrimeField::default_field();
            let report = cm_scan(&s, Bidegree::new(max_deg, max_deg), field)?;
            let (human, code) = match &report.summary {
                CmSummary::AllCm => (
                    format!("all {} intervals Cohen-Macaulay\n", report.verdicts.len()),
                    0,
                ),
                CmSummary::NonCm { element, witness } => (
                    format!("non-CM interval at {element:?}, witness {witness:?}\n"),
                    2,
                ),
            };
            emit(&out, human, json!({"command": "semigroup-cm", "report": report}))?;
            Ok(code)
        }
        Command::SemigroupDiag {
            semigroup,
            diag,
            out,
        } => {
            let text = std::fs::read_to_string(&semigroup)
                .with_context(|| format!("reading {}", semigroup.display()))?;
            let s = input::parse_semigroup(&text)?;
            let d = semigroup_diagonal(&s, &diag.spec()?)?;
            let text = input::serialize_semigroup(&d);
            emit(
                &out,
                text.clone(),
                json!({"command": "semigroup-diag", "semigroup": text}),
            )?;
            Ok(0)
        }
    }
}

fn main() {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => std::process::exit(code),
        Err(err) => {
            eprintln!("error: {err:#}");
            std::process::exit(1);
        }
    }
}
