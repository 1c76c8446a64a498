//! `laxdesc`: every subcommand prints one JSON report on stdout.
//!
//! Exit status 0 means the checked property holds, 1 that it fails (the
//! report is still printed), 2 that the input could not be used.

use std::fmt::Debug;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Map, Value as Json};

use super::ast::Name;
use super::load::{load_str, Env, IndexedValue, NamedCategory, PrecategoryValue, PseudoValue, Value};
use crate::descent::{descent_factorization, eq_groupoid, internal_actions, is_effective_descent};
use crate::fincat::{find_left_adjoint, Category, Cats, FinCategory, Functor, Limits};
use crate::finset::{BasicIndexed, FinSet, FinSetMap};
use crate::kan::{left_kan, right_kan, Direction, KanExtension};
use crate::laxdesc::{check_universal_pair, universal_pair};
use crate::monadics::{benabou_roubaud_compare, beck_chevalley, is_monadic};
use crate::pseudo::{validate_trunc_cosimp, BaseMor, IndexedCategory, Precategory, TruncCosimp};
use crate::theorems::{full_lax_descent, main_theorem_suite, monadicity_suite, SuiteSummary};

pub const SCHEMA: &str = "laxdesc/1";

#[derive(Parser, Debug)]
#[command(name = "laxdesc", version, about = "Lax descent categories on finite data")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Build the lax descent category of a declared pseudofunctor.
    Build {
        file: PathBuf,
        #[arg(long)]
        pseudofunctor: Option<String>,
    },
    /// Internal actions of a precategory for an indexed category.
    Actions {
        file: PathBuf,
        #[arg(long)]
        indexed: String,
        #[arg(long)]
        precategory: String,
    },
    /// The kernel-pair precategory Eq(p).
    Eqp {
        #[arg(long)]
        map: PathBuf,
        #[arg(long)]
        name: Option<String>,
    },
    /// The factorization of F(p) through the lax descent category.
    Factor(MapArgs),
    /// Whether p is of effective descent.
    Effective(MapArgs),
    /// Whether a functor with a left adjoint is monadic.
    Monadic {
        file: PathBuf,
        #[arg(long)]
        functor: String,
    },
    /// Beck–Chevalley or Bénabou–Roubaud for a map
    #[command(subcommand)]
    Check(CheckCommand),
    /// A pointwise Kan extension between table categories.
    Kan {
        direction: KanDirection,
        file: PathBuf,
        #[arg(long = "of")]
        of: String,
        #[arg(long)]
        along: String,
    },
    /// Randomized instance suites for the main theorems
    #[command(subcommand)]
    Verify(VerifyCommand),
}

#[derive(Subcommand, Debug)]
pub enum CheckCommand {
    /// Beck–Chevalley condition on the kernel-pair square of p.
    Bc(MapArgs),
    /// Comparison of descent data with algebras of the induced monad.
    Br(MapArgs),
}

#[derive(Subcommand, Debug)]
pub enum VerifyCommand {
    /// Random instances of the Kan extension theorem for lax descent.
    Main {
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        count: usize,
        #[arg(long, value_enum, default_value = "both")]
        direction: Sides,
    },
    /// Random instances of the monadicity theorem.
    Monadic {
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        count: usize,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum KanDirection {
    Ran,
    Lan,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Sides {
    Right,
    Left,
    Both,
}

#[derive(Args, Debug, Clone)]
pub struct MapArgs {
    /// `slice`, or the name of an `indexed` declaration in the map file.
    #[arg(long)]
    pub indexed: String,
    /// File declaring the map (or functor) `p`.
    #[arg(long)]
    pub map: PathBuf,
    /// Which declaration to use when the file has several.
    #[arg(long)]
    pub name: Option<String>,
    /// Enumeration bound of the slice fibers; required with `--indexed slice`.
    #[arg(long)]
    pub bound: Option<usize>,
}

/// What a subcommand produced.
pub enum Outcome {
    Holds(Json),
    Fails(Json),
}

type Run = std::result::Result<Outcome, String>;

fn report(command: &str, holds: bool, body: impl Serialize) -> Run {
    let mut m = Map::new();
    m.insert("schema".into(), json!(SCHEMA));
    m.insert("command".into(), json!(command));
    m.insert("holds".into(), json!(holds));
    match serde_json::to_value(body).map_err(|e| e.to_string())? {
        Json::Object(o) => m.extend(o),
        v => {
            m.insert("report".into(), v);
        }
    }
    Ok(if holds { Outcome::Holds(Json::Object(m)) } else { Outcome::Fails(Json::Object(m)) })
}

fn read_env(path: &Path) -> std::result::Result<Env, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    load_str(&text).map_err(|e| format!("{}:{e}", path.display()))
}

fn pick(env: &Env, kinds: &[&str], name: Option<&str>) -> std::result::Result<String, String> {
    if let Some(n) = name {
        return match env.get(n) {
            Some(v) if kinds.contains(&v.kind()) => Ok(n.to_string()),
            Some(v) => Err(format!("`{n}` is a {}, expected {}", v.kind(), kinds.join(" or "))),
            None => Err(format!("no declaration named `{n}`")),
        };
    }
    let all: Vec<String> = kinds.iter().flat_map(|k| env.names_of_kind(k)).collect();
    match all.as_slice() {
        [one] => Ok(one.clone()),
        [] => Err(format!("the file declares no {}", kinds.join(" or "))),
        _ => Err(format!("the file declares several candidates ({}); choose one by name", all.join(", "))),
    }
}

fn dbg_list<T: Debug>(xs: &[T], limit: usize) -> Vec<String> {
    xs.iter().take(limit).map(|x| format!("{x:?}")).collect()
}

fn map_command<I: IndexedCategory>(which: &str, ix: &I, p: &BaseMor<I>) -> Run
where
    I::Base: Limits,
{
    let err = |e: crate::Error| e.to_string();
    match which {
        "factor" => {
            let f = descent_factorization(ix, p).map_err(err)?;
            report(
                which,
                f.composite_check,
                json!({
                    "composite_check": f.composite_check,
                    "descent_objects": f.laxdesc.objects().len(),
                    "fiber_objects": f.reindex.source().objects().len(),
                }),
            )
        }
        "effective" => {
            let r = is_effective_descent(ix, p).map_err(err)?;
            report(which, r.effective, r)
        }
        "check bc" => {
            let r = beck_chevalley(ix, p).map_err(err)?;
            report(which, r.invertible, r)
        }
        _ => {
            let r = benabou_roubaud_compare(ix, p).map_err(err)?;
            report(which, r.found, r)
        }
    }
}

fn run_map(which: &str, a: &MapArgs) -> Run {
    let env = read_env(&a.map)?;
    let name = pick(&env, &["map", "functor"], a.name.as_deref())?;
    if a.indexed == "slice" {
        let bound = a.bound.ok_or("`--indexed slice` needs an explicit `--bound`")?;
        let p = match env.get(&name) {
            Some(Value::Map(p)) => p.clone(),
            _ => return Err(format!("`{name}` is not a map; slices are indexed over finite sets")),
        };
        let ix = BasicIndexed { bound, base_bound: p.dom().pow(3).max(p.cod).max(1) };
        return map_command(which, &ix, &p);
    }
    if a.bound.is_some() {
        return Err(format!("`--bound` only applies to `--indexed slice`; `{}` carries its own bound", a.indexed));
    }
    let ienv = env.get(&a.indexed).ok_or_else(|| format!("no indexed category named `{}`", a.indexed))?;
    match (ienv, env.get(&name)) {
        (Value::Indexed(IndexedValue::Slice(ix)), Some(Value::Map(p))) => {
            let ix = BasicIndexed { bound: ix.bound, base_bound: p.dom().pow(3).max(p.cod).max(1) };
            map_command(which, &ix, p)
        }
        (Value::Indexed(IndexedValue::Fam(ix)), Some(Value::Map(p))) => {
            let mut ix = ix.clone();
            ix.base_bound = ix.base_bound.max(p.dom().pow(3)).max(p.cod);
            map_command(which, &ix, p)
        }
        (Value::Indexed(IndexedValue::Diagrams(ix)), Some(Value::Functor(h))) => map_command(which, ix, &h.functor),
        (Value::Indexed(_), _) => Err(format!("`{name}` does not live in the base of `{}`", a.indexed)),
        (v, _) => Err(format!("`{}` is a {}, expected an indexed category", a.indexed, v.kind())),
    }
}

fn ld_report<C: Category>(a: Arc<TruncCosimp<C>>) -> Run {
    let validity = validate_trunc_cosimp(&a);
    let ld = full_lax_descent(a.clone());
    let up = universal_pair(&ld);
    let universal = check_universal_pair(&a, &up);
    let obs = ld.objects();
    let morphisms: usize = obs.iter().map(|x| obs.iter().map(|y| ld.hom(x, y).len()).sum::<usize>()).sum();
    let ok = validity.is_ok() && universal.is_ok();
    let mut violations = validity.violations.clone();
    violations.extend(universal.violations.iter().cloned());
    violations.truncate(8);
    let data: Vec<String> = obs.iter().take(32).map(|x| format!("{:?} with {:?}", x.w, x.phi)).collect();
    report(
        "build",
        ok,
        json!({
            "pseudofunctor_valid": validity.is_ok(),
            "universal_pair_valid": universal.is_ok(),
            "violations": violations,
            "fiber_objects": a.cat(0).objects().len(),
            "descent_objects": obs.len(),
            "descent_morphisms": morphisms,
            "data": data,
        }),
    )
}

fn actions_report<I: IndexedCategory>(ix: &I, pre: &Precategory<I::Base>) -> Run {
    let (_, ld, up) = internal_actions(ix, pre).map_err(|e| e.to_string())?;
    let obs = ld.objects();
    let carriers: Vec<_> = obs.iter().map(|x| up.d_a.ob(x)).collect();
    report(
        "actions",
        true,
        json!({
            "actions": obs.len(),
            "carriers": dbg_list(&carriers, 32),
        }),
    )
}

fn named_obj(c: &NamedCategory, x: usize) -> String {
    c.objects[x].clone()
}

fn named_mor(c: &NamedCategory, f: usize) -> String {
    c.morphisms[f].clone()
}

fn kan_report(direction: KanDirection, env: &Env, of: &str, along: &str) -> Run {
    let (j, h) = (env.functor(&Name::new(of)).map_err(|e| e.to_string())?, env.functor(&Name::new(along)).map_err(|e| e.to_string())?);
    if j.source != h.source {
        return Err(format!("`{of}` and `{along}` have different sources ({} and {})", j.source, h.source));
    }
    let cat = |n: &str| env.category(&Name::new(n)).map_err(|e| e.to_string());
    let (bcat, ccat, scat) = (cat(&h.target)?, cat(&j.target)?, cat(&j.source)?);
    let (jf, hf) = (j.functor.to_functor(), h.functor.to_functor());
    let k: KanExtension<FinCategory, FinCategory, FinCategory> = match direction {
        KanDirection::Ran => right_kan(&jf, &hf),
        KanDirection::Lan => left_kan(&jf, &hf),
    };
    let value = k.value.as_ref().map(|v: &Functor<FinCategory, FinCategory>| {
        let objects: Map<String, Json> =
            (0..bcat.objects.len()).map(|b| (named_obj(bcat, b), json!(named_obj(ccat, v.ob(&b))))).collect();
        let morphisms: Map<String, Json> =
            (0..bcat.morphisms.len()).map(|f| (named_mor(bcat, f), json!(named_mor(ccat, v.mor(&f))))).collect();
        json!({ "objects": objects, "morphisms": morphisms })
    });
    let universal = k.universal.as_ref().map(|u| {
        let comps: Map<String, Json> =
            (0..scat.objects.len()).map(|s| (named_obj(scat, s), json!(named_mor(ccat, u.at(&s))))).collect();
        json!(comps)
    });
    let witnesses: Vec<String> = k.failure_witness.iter().map(|b| named_obj(bcat, *b)).collect();
    let name = match direction {
        KanDirection::Ran => "kan ran",
        KanDirection::Lan => "kan lan",
    };
    report(
        name,
        k.exists,
        json!({ "exists": k.exists, "value": value, "universal": universal, "witnesses": witnesses }),
    )
}

fn suite_json(s: &SuiteSummary) -> Json {
    json!({
        "instances": s.instances,
        "vacuous": s.vacuous,
        "verified": s.verified,
        "counterexamples": s.counterexamples,
        "witnesses": s.witnesses,
    })
}

/// Runs a parsed command line.
pub fn execute(cli: Cli) -> Run {
    match cli.command {
        Command::Build { file, pseudofunctor } => {
            let env = read_env(&file)?;
            let name = pick(&env, &["pseudofunctor"], pseudofunctor.as_deref())?;
            match env.get(&name) {
                Some(Value::Pseudofunctor(PseudoValue::Slice(a))) => ld_report(a.clone()),
                Some(Value::Pseudofunctor(PseudoValue::Fam(a))) => ld_report(a.clone()),
                Some(Value::Pseudofunctor(PseudoValue::Diagrams(a))) => ld_report(a.clone()),
                _ => Err(format!("`{name}` is not a pseudofunctor")),
            }
        }
        Command::Actions { file, indexed, precategory } => {
            let env = read_env(&file)?;
            let ix = match env.get(&indexed) {
                Some(Value::Indexed(ix)) => ix,
                _ => return Err(format!("no indexed category named `{indexed}`")),
            };
            let pre = match env.get(&precategory) {
                Some(Value::Precategory(p)) => p,
                _ => return Err(format!("no precategory named `{precategory}`")),
            };
            match (ix, pre) {
                (IndexedValue::Slice(f), PrecategoryValue::Sets(a)) => actions_report(f, a),
                (IndexedValue::Fam(f), PrecategoryValue::Sets(a)) => actions_report(f, a),
                (IndexedValue::Diagrams(f), PrecategoryValue::FunctorKernel(h)) => {
                    let g = eq_groupoid(&f.cats, h).map_err(|e| e.to_string())?;
                    actions_report(f, &g.precategory)
                }
                _ => Err(format!("`{precategory}` does not live in the base of `{indexed}`")),
            }
        }
        Command::Eqp { map, name } => {
            let env = read_env(&map)?;
            let name = pick(&env, &["map", "functor"], name.as_deref())?;
            match env.get(&name) {
                Some(Value::Map(p)) => {
                    let base = Arc::new(FinSet::new(p.dom().pow(3).max(p.cod).max(1)));
                    let g = eq_groupoid(&base, p).map_err(|e| e.to_string())?;
                    let text = |m: &FinSetMap| m.to_text();
                    report(
                        "eqp",
                        true,
                        json!({
                            "objects": g.precategory.objects,
                            "pi_lower": text(&g.pi_lower),
                            "pi_upper": text(&g.pi_upper),
                            "diagonal": text(&g.diagonal),
                        }),
                    )
                }
                Some(Value::Functor(h)) => {
                    let g = eq_groupoid(&Arc::new(Cats::new(Vec::new())), &h.functor).map_err(|e| e.to_string())?;
                    let sizes: Vec<[usize; 2]> = g
                        .precategory
                        .objects
                        .iter()
                        .map(|c| [c.object_count(), c.morphism_count()])
                        .collect();
                    report("eqp", true, json!({ "objects_and_morphisms": sizes }))
                }
                _ => Err(format!("`{name}` is neither a map nor a functor")),
            }
        }
        Command::Factor(a) => run_map("factor", &a),
        Command::Effective(a) => run_map("effective", &a),
        Command::Check(CheckCommand::Bc(a)) => run_map("check bc", &a),
        Command::Check(CheckCommand::Br(a)) => run_map("check br", &a),
        Command::Monadic { file, functor } => {
            let env = read_env(&file)?;
            let g = env.functor(&Name::new(functor.clone())).map_err(|e| e.to_string())?;
            match find_left_adjoint(&g.functor.to_functor()) {
                None => report("monadic", false, json!({ "has_left_adjoint": false, "monadic": false })),
                Some(adj) => {
                    let r = is_monadic(&adj);
                    let mut body = serde_json::to_value(&r).map_err(|e| e.to_string())?;
                    body["has_left_adjoint"] = json!(true);
                    report("monadic", r.monadic, body)
                }
            }
        }
        Command::Kan { direction, file, of, along } => {
            let env = read_env(&file)?;
            kan_report(direction, &env, &of, &along)
        }
        Command::Verify(VerifyCommand::Main { seed, count, direction }) => {
            let mut per = Map::new();
            let mut total = SuiteSummary::default();
            for (side, d) in [(Sides::Right, Direction::Right), (Sides::Left, Direction::Left)] {
                if direction != Sides::Both && direction != side {
                    continue;
                }
                let s = main_theorem_suite(seed, count, d);
                per.insert(format!("{side:?}").to_lowercase(), suite_json(&s));
                total.instances += s.instances;
                total.vacuous += s.vacuous;
                total.verified += s.verified;
                total.counterexamples += s.counterexamples;
                total.witnesses.extend(s.witnesses);
            }
            let mut body = suite_json(&total);
            body["directions"] = Json::Object(per);
            report("verify main", total.counterexamples == 0, body)
        }
        Command::Verify(VerifyCommand::Monadic { seed, count }) => {
            let s = monadicity_suite(seed, count);
            report("verify monadic", s.counterexamples == 0, suite_json(&s))
        }
    }
}

// A closed pipe on stdout is not an error worth reporting.
fn emit(j: &Json) {
    let mut out = std::io::stdout().lock();
    let _ = serde_json::to_writer_pretty(&mut out, j);
    let _ = writeln!(out);
}

/// Parses `args` (program name first), runs, prints, and maps the result
/// to an exit status.
pub fn run<I, T>(args: I) -> ExitCode
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match execute(cli) {
        Ok(Outcome::Holds(j)) => {
            emit(&j);
            ExitCode::SUCCESS
        }
        Ok(Outcome::Fails(j)) => {
            emit(&j);
            ExitCode::from(1)
        }
        Err(msg) => {
            eprintln!("laxdesc: {msg}");
            ExitCode::from(2)
        }
    }
}
