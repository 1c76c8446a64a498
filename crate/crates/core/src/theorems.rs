//! Instance-level verification of the Main Theorem, its corollaries and
//! the monadicity theorem, with brute-force oracles and random instances.

use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::delta3::Gen;
use crate::descent::is_effective_descent;
use crate::fincat::catalog::{self, Monoid};
use crate::fincat::{
    check_equivalence, find_left_adjoint, find_natural_iso, functors_equal, materialize, random_functor, Adjunction,
    Category, EquivalenceReport, FinCategory, FinFunctor, Functor, Limits, NatTrans, PowerCat,
};
use crate::finset::{all_maps, basic_indexed_category, diagram_indexed_category, FinSetMap};
use crate::kan::{
    comparison_cell, creates, factor_through_lan, factor_through_ran, is_right_kan, left_kan, preserves, right_kan,
    split_forks_of, Direction, KanExtension,
};
use crate::laxdesc::{factor_2cell, factor_functor, forgetful, DObj, DMor, LaxDesc};
use crate::monadics::{is_monadic, MonadicityReport};
use crate::pseudo::{
    compose_indexed_with_precategory, nerve, sigma_precategory, FamIndexed, IndexedCategory, TableIndexed,
    TruncCosimp, Twisted,
};

/// Hypotheses of the Main Theorem. For the right version the two functors
/// are `A(d⁰)` and `A(D⁰)∘A(d⁰)`, for the left one `A(d¹)` and `A(D²)∘A(d¹)`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Hypotheses {
    pub kan_exists: bool,
    pub preserved_by_first: bool,
    pub preserved_by_second: bool,
    pub witness: Option<String>,
}

impl Hypotheses {
    pub fn hold(&self) -> bool {
        self.kan_exists && self.preserved_by_first && self.preserved_by_second
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Conclusions {
    /// The induced `φ` satisfies both descent equations at every object.
    pub phi_is_datum: bool,
    /// `(J̌, ν̃)` is a Kan extension computed directly upstairs.
    pub oracle_agreement: bool,
    /// `J̌` is isomorphic to the oracle's value.
    pub oracle_iso: bool,
    pub preserved_by_da: bool,
    pub reflects: bool,
    pub lifts: usize,
    pub created: bool,
}

/// Outcome of [`verify_main_theorem_right`] or [`verify_main_theorem_left`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MainTheoremReport {
    pub direction: Direction,
    pub hypotheses: Hypotheses,
    /// Absent exactly when the hypotheses fail.
    pub conclusions: Option<Conclusions>,
    /// Components of `φ`, one per object of the codomain of `H`.
    pub phi: Vec<String>,
    pub witness: Option<String>,
}

impl MainTheoremReport {
    pub fn vacuous(&self) -> bool {
        !self.hypotheses.hold()
    }

    /// Every conclusion holds; vacuously true when the hypotheses fail.
    pub fn verified(&self) -> bool {
        match &self.conclusions {
            None => true,
            Some(c) => c.phi_is_datum && c.oracle_agreement && c.oracle_iso && c.preserved_by_da && c.created,
        }
    }
}

/// `φ`, `J̌` and `ν̃`.
pub struct Construction<S: Category, B: Category, C: Category> {
    pub phi: NatTrans<B, C>,
    pub j_check: Functor<B, LaxDesc<C>>,
    pub nu_tilde: NatTrans<S, LaxDesc<C>>,
}

pub struct MainTheoremRun<S: Category, B: Category, C: Category> {
    pub report: MainTheoremReport,
    pub construction: Option<Construction<S, B, C>>,
}

fn hypotheses<S: Category, B: Category, C: Limits>(
    ke: &KanExtension<S, B, C>,
    first: &Functor<C, C>,
    second: &Functor<C, C>,
) -> Hypotheses {
    let mut h = Hypotheses { kan_exists: ke.exists, ..Default::default() };
    if !ke.exists {
        h.witness = ke.failure_witness.as_ref().map(|b| format!("no pointwise Kan extension at {b:?}"));
        return h;
    }
    h.preserved_by_first = preserves(first, ke);
    h.preserved_by_second = preserves(second, ke);
    if !h.preserved_by_first {
        h.witness = Some("not preserved by the first reindexing".into());
    } else if !h.preserved_by_second {
        h.witness = Some("not preserved by the composite reindexing".into());
    }
    h
}

fn components<B: Category, C: Category>(phi: &NatTrans<B, C>) -> Vec<String> {
    phi.source().source().objects().iter().map(|b| format!("{:?}", phi.at(b))).collect()
}

fn invertible<S: Category, C: Category>(cell: &crate::error::Result<NatTrans<S, C>>) -> bool {
    cell.as_ref().is_ok_and(|c| c.invertibility_witness().is_none())
}

/// The Main Theorem for right Kan extensions on one instance: `d^A`
/// creates `ran_H(d^A∘J)` provided it exists and is preserved by `A(d⁰)`
/// and `A(D⁰)∘A(d⁰)`.
pub fn verify_main_theorem_right<S: Category, B: Category, C: Limits>(
    ld: &Arc<LaxDesc<C>>,
    j: &Functor<S, LaxDesc<C>>,
    h: &Functor<S, B>,
) -> MainTheoremRun<S, B, C> {
    let a = ld.pseudofunctor().clone();
    let d_a = forgetful(ld);
    let (d0, d1) = (a.gen(Gen::d0).clone(), a.gen(Gen::d1).clone());
    let dd0 = d0.then(a.gen(Gen::D0));
    let dj = j.then(&d_a);
    let ran = right_kan(&dj, h);
    let hyp = hypotheses(&ran, &d0, &dd0);
    let mut report =
        MainTheoremReport { direction: Direction::Right, hypotheses: hyp, conclusions: None, phi: Vec::new(), witness: None };
    if !report.hypotheses.hold() {
        return MainTheoremRun { report, construction: None };
    }
    let (r, nu) = (ran.value.clone().unwrap(), ran.universal.clone().unwrap());
    let mut concl = Conclusions::default();
    // φ: the unique cell whose pasting with the universal cell of
    // A(d⁰)∘R is ψJ · A(d¹)ν
    let built = (|| {
        let k0 = right_kan(&dj.then(&d0), h);
        let cmp = comparison_cell(&d0, &ran)?;
        let psi_j = NatTrans::new(dj.then(&d1), dj.then(&d0), {
            let j = j.clone();
            move |s| j.ob(s).phi
        });
        let alpha = psi_j.vertical(&nu.whisker_left(&d1));
        let beta = factor_through_ran(&k0, &r.then(&d1), &alpha)?;
        let phi = cmp.inverse().vertical(&beta).cached();
        Ok::<_, crate::error::Error>(phi)
    })();
    let phi = match built {
        Ok(p) => p,
        Err(e) => {
            report.witness = Some(format!("φ could not be induced: {e}"));
            report.conclusions = Some(concl);
            return MainTheoremRun { report, construction: None };
        }
    };
    report.phi = components(&phi);
    let bobs = h.target().objects();
    concl.phi_is_datum = bobs.iter().all(|b| ld.is_datum(&r.ob(b), &phi.at(b)));
    if !concl.phi_is_datum {
        report.witness = Some("the induced φ is not a descent datum".into());
        report.conclusions = Some(concl);
        return MainTheoremRun { report, construction: None };
    }
    let construction = factor_functor(ld, &r, &phi).and_then(|jc| {
        let nt = factor_2cell(ld, &h.then(&jc), j, &nu)?;
        Ok(Construction { phi: phi.clone(), j_check: jc, nu_tilde: nt })
    });
    let construction = match construction {
        Ok(c) => c,
        Err(e) => {
            report.witness = Some(format!("ν does not lift: {e}"));
            report.conclusions = Some(concl);
            return MainTheoremRun { report, construction: None };
        }
    };
    let oracle = right_kan(j, h);
    concl.oracle_agreement = oracle.exists && is_right_kan(&oracle, &construction.j_check, &construction.nu_tilde);
    concl.oracle_iso = oracle
        .value
        .as_ref()
        .is_some_and(|v| find_natural_iso(&construction.j_check, v).is_some());
    concl.preserved_by_da = preserves(&d_a, &oracle);
    let cr = creates(&d_a, j, h);
    concl.reflects = cr.reflects;
    concl.lifts = cr.lifts;
    concl.created = cr.creates();
    if !(concl.oracle_agreement && concl.oracle_iso && concl.preserved_by_da && concl.created) {
        report.witness = cr.witness.or(Some("the oracle disagrees with the constructed extension".into()));
    }
    report.conclusions = Some(concl);
    MainTheoremRun { report, construction: Some(construction) }
}

fn is_left_kan<S: Category, B: Category, C: Limits>(
    ke: &KanExtension<S, B, C>,
    l: &Functor<B, C>,
    eta: &NatTrans<S, C>,
) -> bool {
    ke.exists && invertible(&factor_through_lan(ke, l, eta))
}

/// The codual clause: `d^A` creates `lan_H(d^A∘J)` provided it exists and
/// is preserved by `A(d¹)` and `A(D²)∘A(d¹)`.
pub fn verify_main_theorem_left<S: Category, B: Category, C: Limits>(
    ld: &Arc<LaxDesc<C>>,
    j: &Functor<S, LaxDesc<C>>,
    h: &Functor<S, B>,
) -> MainTheoremRun<S, B, C> {
    let a = ld.pseudofunctor().clone();
    let d_a = forgetful(ld);
    let (d0, d1) = (a.gen(Gen::d0).clone(), a.gen(Gen::d1).clone());
    let dd1 = d1.then(a.gen(Gen::D2));
    let dj = j.then(&d_a);
    let lan = left_kan(&dj, h);
    let hyp = hypotheses(&lan, &d1, &dd1);
    let mut report =
        MainTheoremReport { direction: Direction::Left, hypotheses: hyp, conclusions: None, phi: Vec::new(), witness: None };
    if !report.hypotheses.hold() {
        return MainTheoremRun { report, construction: None };
    }
    let (l, nu) = (lan.value.clone().unwrap(), lan.universal.clone().unwrap());
    let mut concl = Conclusions::default();
    let built = (|| {
        let k1 = left_kan(&dj.then(&d1), h);
        let cmp = comparison_cell(&d1, &lan)?;
        let psi_j = NatTrans::new(dj.then(&d1), dj.then(&d0), {
            let j = j.clone();
            move |s| j.ob(s).phi
        });
        let alpha = nu.whisker_left(&d0).vertical(&psi_j);
        let beta = factor_through_lan(&k1, &l.then(&d0), &alpha)?;
        Ok::<_, crate::error::Error>(beta.vertical(&cmp.inverse()).cached())
    })();
    let phi = match built {
        Ok(p) => p,
        Err(e) => {
            report.witness = Some(format!("φ could not be induced: {e}"));
            report.conclusions = Some(concl);
            return MainTheoremRun { report, construction: None };
        }
    };
    report.phi = components(&phi);
    let bobs = h.target().objects();
    concl.phi_is_datum = bobs.iter().all(|b| ld.is_datum(&l.ob(b), &phi.at(b)));
    if !concl.phi_is_datum {
        report.witness = Some("the induced φ is not a descent datum".into());
        report.conclusions = Some(concl);
        return MainTheoremRun { report, construction: None };
    }
    let construction = factor_functor(ld, &l, &phi).and_then(|jc| {
        let nt = factor_2cell(ld, j, &h.then(&jc), &nu)?;
        Ok(Construction { phi: phi.clone(), j_check: jc, nu_tilde: nt })
    });
    let construction = match construction {
        Ok(c) => c,
        Err(e) => {
            report.witness = Some(format!("ν does not lift: {e}"));
            report.conclusions = Some(concl);
            return MainTheoremRun { report, construction: None };
        }
    };
    let oracle = left_kan(j, h);
    concl.oracle_agreement = is_left_kan(&oracle, &construction.j_check, &construction.nu_tilde);
    concl.oracle_iso = oracle
        .value
        .as_ref()
        .is_some_and(|v| find_natural_iso(&construction.j_check, v).is_some());
    concl.preserved_by_da = preserves(&d_a, &oracle);
    // reflection of left Kan extensions is reflection of right ones in the opposites
    let cr = creates(&d_a.op(), &j.op(), &h.op());
    concl.reflects = cr.reflects;
    concl.lifts = cr.lifts;
    concl.created = cr.creates();
    if !(concl.oracle_agreement && concl.oracle_iso && concl.preserved_by_da && concl.created) {
        report.witness = cr.witness.or(Some("the oracle disagrees with the constructed extension".into()));
    }
    report.conclusions = Some(concl);
    MainTheoremRun { report, construction: Some(construction) }
}

/// Outcome of [`verify_absolute_creation`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AbsoluteCreationReport {
    /// `d^A f, d^A g` admit a split fork.
    pub split: bool,
    pub forks: usize,
    pub main: Option<MainTheoremReport>,
    pub unique_lift: bool,
    pub witness: Option<String>,
}

impl AbsoluteCreationReport {
    pub fn confirmed(&self) -> bool {
        self.split && self.unique_lift && self.main.as_ref().is_some_and(|m| !m.vacuous() && m.verified())
    }
}

/// A parallel pair of descent morphisms whose underlying pair is split:
/// its coequalizer is created by `d^A`, with exactly one strict lift.
pub fn verify_absolute_creation<C: Limits>(ld: &Arc<LaxDesc<C>>, f: &DMor<C>, g: &DMor<C>) -> AbsoluteCreationReport {
    let a1 = ld.pseudofunctor().cat(0).clone();
    let forks = split_forks_of(a1.as_ref(), &f.m, &g.m);
    let mut report =
        AbsoluteCreationReport { split: !forks.is_empty(), forks: forks.len(), main: None, unique_lift: false, witness: None };
    if forks.is_empty() {
        report.witness = Some("the underlying pair is not split".into());
        return report;
    }
    let (j, h) = pair_functors(ld, f, g);
    let run = verify_main_theorem_left(ld, &j, &h);
    report.unique_lift = run.report.conclusions.as_ref().is_some_and(|c| c.lifts == 1);
    report.witness = run.report.witness.clone();
    report.main = Some(run.report);
    report
}

/// `J: (0 ⇉ 1) → C` picking `f, g`, and the functor to the point.
#[allow(clippy::type_complexity)]
pub fn pair_functors<C: Category>(c: &Arc<C>, f: &C::Mor, g: &C::Mor) -> (Functor<FinCategory, C>, Functor<FinCategory, FinCategory>) {
    let s = Arc::new(catalog::parallel_pair());
    let (x, y) = (c.dom(f), c.cod(f));
    let (c1, c2, x1, y1, f1, g1) = (c.clone(), c.clone(), x.clone(), y.clone(), f.clone(), g.clone());
    let j = Functor::new(
        s.clone(),
        c.clone(),
        move |o: &usize| if *o == 0 { x1.clone() } else { y1.clone() },
        move |m: &usize| match m {
            0 => c1.id(&x),
            1 => c2.id(&y),
            2 => f1.clone(),
            _ => g1.clone(),
        },
    );
    let one = Arc::new(FinCategory::terminal());
    (j, Functor::constant(s, one, 0))
}

/// Outcome of [`verify_monadicity_theorem`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MonadicityTheoremReport {
    pub has_left_adjoint: bool,
    pub equivalence: EquivalenceReport,
    /// `G = d^A∘E` on the enumerated objects and morphisms.
    pub factors: bool,
    pub monadicity: Option<MonadicityReport>,
    pub witness: Option<String>,
}

impl MonadicityTheoremReport {
    pub fn hypotheses_met(&self) -> bool {
        self.has_left_adjoint && self.equivalence.is_equivalence() && self.factors
    }

    pub fn verified(&self) -> bool {
        !self.hypotheses_met() || self.monadicity.as_ref().is_some_and(|m| m.monadic && m.agree)
    }
}

/// `G = d^A∘E` with `E` an equivalence and `G` a right adjoint is monadic.
pub fn verify_monadicity_theorem<S: Limits, C: Category>(
    g: &Functor<S, C>,
    adj: Option<&Adjunction<S, C>>,
    ld: &Arc<LaxDesc<C>>,
    e: &Functor<S, LaxDesc<C>>,
) -> MonadicityTheoremReport {
    let equivalence = check_equivalence(e);
    let factors = functors_equal(&e.then(&forgetful(ld)), g).is_none();
    let mut report =
        MonadicityTheoremReport { has_left_adjoint: adj.is_some(), equivalence, factors, monadicity: None, witness: None };
    if !report.hypotheses_met() {
        report.witness = Some("hypothesis unmet".into());
        return report;
    }
    let m = is_monadic(adj.unwrap());
    report.witness = m.witness.clone();
    report.monadicity = Some(m);
    report
}

/// Counts over a family of random instances.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SuiteSummary {
    pub instances: usize,
    pub vacuous: usize,
    pub verified: usize,
    pub counterexamples: usize,
    pub witnesses: Vec<String>,
}

impl SuiteSummary {
    fn absorb(mut self, other: SuiteSummary) -> SuiteSummary {
        self.instances += other.instances;
        self.vacuous += other.vacuous;
        self.verified += other.verified;
        self.counterexamples += other.counterexamples;
        self.witnesses.extend(other.witnesses);
        self.witnesses.truncate(8);
        self
    }

    fn one(vacuous: bool, ok: bool, witness: impl FnOnce() -> String) -> SuiteSummary {
        SuiteSummary {
            instances: 1,
            vacuous: usize::from(vacuous),
            verified: usize::from(!vacuous && ok),
            counterexamples: usize::from(!vacuous && !ok),
            witnesses: if !vacuous && !ok { vec![witness()] } else { Vec::new() },
        }
    }

    pub fn non_vacuous(&self) -> usize {
        self.instances - self.vacuous
    }
}

fn run_suite(seed: u64, count: usize, f: impl Fn(&mut ChaCha8Rng, u64) -> SuiteSummary + Sync) -> SuiteSummary {
    (0..count as u64)
        .into_par_iter()
        .map(|i| {
            let s = seed.wrapping_mul(0x9e37_79b9_7f4a_7c15).wrapping_add(i);
            f(&mut ChaCha8Rng::seed_from_u64(s), s)
        })
        .reduce(SuiteSummary::default, SuiteSummary::absorb)
}

fn random_monoid<R: Rng>(rng: &mut R) -> Monoid {
    let all = [Monoid::trivial(), Monoid::m2(), Monoid::cyclic(2), Monoid::left_zero(), Monoid::right_zero()];
    all.choose(rng).unwrap().clone()
}

// Fibers for the random instances: every category here has at most three
// objects; the first half have all finite limits and colimits.
fn random_fiber<R: Rng>(rng: &mut R) -> FinCategory {
    if rng.gen_bool(0.7) {
        let complete = [FinCategory::terminal(), catalog::chain(2), catalog::chain(3), catalog::iso_pair()];
        complete.choose(rng).unwrap().clone()
    } else {
        catalog::random_category(rng, 3, 8)
    }
}

/// A random `A = Fam_X∘op(a)` with `a` the precategory of a monoid or the
/// nerve of a small category, twisted by chosen isomorphisms half the time.
pub fn random_cosimp<R: Rng>(rng: &mut R) -> (Arc<TruncCosimp<PowerCat>>, String) {
    let x = Arc::new(random_fiber(rng));
    let (pre, what) = if rng.gen_bool(0.75) {
        let m = random_monoid(rng);
        (sigma_precategory(&m), format!("Σ of a monoid of order {}", m.size()))
    } else {
        let d = [FinCategory::terminal(), catalog::arrow(), FinCategory::discrete(2)].choose(rng).unwrap().clone();
        (nerve(&d), format!("nerve of a category with {} objects", d.object_count()))
    };
    let fam = FamIndexed { x: x.clone(), base_bound: pre.objects[2].max(pre.objects[1]) };
    let a = compose_indexed_with_precategory(&fam, &pre).expect("valid precategory");
    let twisted = rng.gen_bool(0.5);
    let a = if twisted { a.twist(rng.gen()) } else { a };
    let desc = format!("{what} in powers of a category with {} objects{}", x.object_count(), if twisted { ", twisted" } else { "" });
    (Arc::new(a), desc)
}

/// A random Main Theorem instance: `A`, its full lax descent category, and
/// `J: S → Desc(A)`, `H: S → B` with `S, B` of at most three objects.
#[allow(clippy::type_complexity)]
pub fn random_main_instance<R: Rng>(
    rng: &mut R,
) -> Option<(Arc<LaxDesc<PowerCat>>, Functor<FinCategory, LaxDesc<PowerCat>>, Functor<FinCategory, FinCategory>, String)> {
    let (a, desc) = random_cosimp(rng);
    let ws = a.cat(0).objects();
    let ld = Arc::new(LaxDesc::new(a, &ws));
    let s = Arc::new(catalog::random_category(rng, 3, 8));
    let b = Arc::new(catalog::random_category(rng, 3, 8));
    let j = random_functor(&s, &ld, rng, 2000)?;
    let h = random_functor(&s, &b, rng, 2000)?;
    Some((ld, j, h, desc))
}

/// The Main Theorem over `count` random instances.
pub fn main_theorem_suite(seed: u64, count: usize, direction: Direction) -> SuiteSummary {
    run_suite(seed, count, |rng, s| {
        let Some((ld, j, h, desc)) = random_main_instance(rng) else {
            return SuiteSummary { instances: 1, vacuous: 1, ..Default::default() };
        };
        let report = match direction {
            Direction::Right => verify_main_theorem_right(&ld, &j, &h).report,
            Direction::Left => verify_main_theorem_left(&ld, &j, &h).report,
        };
        SuiteSummary::one(report.vacuous(), report.verified(), || format!("seed {s}: {desc}: {:?}", report.witness))
    })
}

fn point_map<R: Rng>(rng: &mut R, n: usize) -> FinSetMap {
    FinSetMap::new(n, vec![rng.gen_range(0..n)]).expect("a point")
}

/// Effectiveness of `p: 1 → b` against `F(p)` being an equivalence, over
/// families, slices and set-valued diagrams, strict or twisted.
pub fn terminal_domain_suite(seed: u64, count: usize) -> SuiteSummary {
    fn agree<I: IndexedCategory>(f: &I, p: &crate::pseudo::BaseMor<I>) -> Option<bool>
    where
        I::Base: Limits,
    {
        let eff = is_effective_descent(f, p).ok()?.effective;
        Some(eff == check_equivalence(&f.reindex(p)).is_equivalence())
    }
    run_suite(seed, count, |rng, s| {
        let twist = rng.gen_bool(0.5);
        let tseed: u64 = rng.gen();
        let (res, what) = match rng.gen_range(0..3) {
            0 => {
                let x = Arc::new(random_fiber(rng));
                let n = rng.gen_range(1..=3);
                let fam = Arc::new(FamIndexed { x, base_bound: 3 });
                let p = point_map(rng, n);
                let r = if twist { agree(&Twisted::new(fam, tseed), &p) } else { agree(fam.as_ref(), &p) };
                (r, format!("families, 1 → {n}"))
            }
            1 => {
                let n = rng.gen_range(1..=2);
                let f = Arc::new(basic_indexed_category(2));
                let p = point_map(rng, n);
                let r = if twist { agree(&Twisted::new(f, tseed), &p) } else { agree(f.as_ref(), &p) };
                (r, format!("slices, 1 → {n}"))
            }
            _ => {
                let b = [catalog::arrow(), catalog::iso_pair(), FinCategory::discrete(2), FinCategory::terminal()]
                    .choose(rng)
                    .unwrap()
                    .clone();
                let one = Arc::new(FinCategory::terminal());
                let bb = Arc::new(b.clone());
                let o = rng.gen_range(0..b.object_count());
                let p = FinFunctor::new(one, bb.clone(), vec![o], vec![bb.identity_of(o)]).expect("a point");
                let f = Arc::new(diagram_indexed_category(vec![FinCategory::terminal(), b], 1));
                let r = if twist { agree(&Twisted::new(f, tseed), &p) } else { agree(f.as_ref(), &p) };
                (r, "set-valued diagrams, a point".to_string())
            }
        };
        match res {
            None => SuiteSummary { instances: 1, vacuous: 1, ..Default::default() },
            Some(ok) => SuiteSummary::one(false, ok, || format!("seed {s}: {what}")),
        }
    })
}

/// A random `G: 2^op → Cat`: two fibers and `G(d)`, often an equivalence.
pub fn random_two_indexed<R: Rng>(rng: &mut R) -> TableIndexed {
    let base = Arc::new(catalog::arrow());
    let (f0, f1, gd) = match rng.gen_range(0..4) {
        0 => {
            let c = Arc::new(random_fiber(rng));
            (c.clone(), c.clone(), FinFunctor::identity(c))
        }
        1 => {
            // the two isomorphic objects collapse to a point, or a point includes
            let (big, small) = (Arc::new(catalog::iso_pair()), Arc::new(FinCategory::terminal()));
            if rng.gen_bool(0.5) {
                (small.clone(), big.clone(), FinFunctor::new(big, small, vec![0, 0], vec![0; 4]).unwrap())
            } else {
                (big.clone(), small.clone(), FinFunctor::new(small, big.clone(), vec![1], vec![big.identity_of(1)]).unwrap())
            }
        }
        _ => loop {
            let (c0, c1) = (Arc::new(random_fiber(rng)), Arc::new(random_fiber(rng)));
            if let Some(g) = random_functor(&c1, &c0, rng, 2000) {
                break (c0, c1.clone(), FinFunctor::materialize(&g));
            }
        },
    };
    let mut reindex = Vec::new();
    for u in 0..base.morphism_count() {
        reindex.push(if base.is_identity(u) {
            FinFunctor::identity(if base.dom(&u) == 0 { f0.clone() } else { f1.clone() })
        } else {
            gd.clone()
        });
    }
    TableIndexed { base, fibers: vec![f0, f1], reindex }
}

/// Effectiveness of `d: 0 → 1` against `G(d)` being an equivalence.
pub fn two_lemma_suite(seed: u64, count: usize) -> SuiteSummary {
    run_suite(seed, count, |rng, s| {
        let ix = Arc::new(random_two_indexed(rng));
        let d = (0..ix.base.morphism_count()).find(|u| !ix.base.is_identity(*u)).unwrap();
        let equiv = check_equivalence(&ix.reindex(&d)).is_equivalence();
        let eff = if rng.gen_bool(0.5) {
            is_effective_descent(&Twisted::new(ix.clone(), rng.gen()), &d)
        } else {
            is_effective_descent(ix.as_ref(), &d)
        };
        match eff {
            Err(_) => SuiteSummary { instances: 1, vacuous: 1, ..Default::default() },
            Ok(r) => SuiteSummary::one(false, r.effective == equiv, || format!("seed {s}: effective {} vs equivalence {equiv}", r.effective)),
        }
    })
}

/// `E: C → Desc(A)` from the tables of the descent category, fattened by
/// a pair of isomorphic copies half the time.
pub fn random_equivalence<R: Rng, D: Category>(
    rng: &mut R,
    ld: &Arc<LaxDesc<D>>,
) -> Functor<FinCategory, LaxDesc<D>> {
    let mat = materialize(ld);
    let incl = mat.inclusion();
    if rng.gen_bool(0.5) {
        return incl;
    }
    let base = mat.category.clone();
    let pair = catalog::iso_pair();
    let fat = Arc::new(catalog::product(&base, &pair));
    let (nb, mb) = (pair.object_count(), pair.morphism_count());
    let proj = FinFunctor {
        source: fat.clone(),
        target: incl.source().clone(),
        object_map: (0..fat.object_count()).map(|x| x / nb).collect(),
        morphism_map: (0..fat.morphism_count()).map(|f| f / mb).collect(),
    };
    proj.to_functor().then(&incl)
}

/// Monadicity of `d^A∘E` over random instances with a left adjoint.
pub fn monadicity_suite(seed: u64, count: usize) -> SuiteSummary {
    run_suite(seed, count, |rng, s| {
        let (a, desc) = random_cosimp(rng);
        let ws = a.cat(0).objects();
        let ld = Arc::new(LaxDesc::new(a, &ws));
        let e = random_equivalence(rng, &ld);
        let g = e.then(&forgetful(&ld));
        let adj = find_left_adjoint(&g);
        let r = verify_monadicity_theorem(&g, adj.as_ref(), &ld, &e);
        SuiteSummary::one(!r.hypotheses_met(), r.verified(), || format!("seed {s}: {desc}: {:?}", r.witness))
    })
}

/// Beck–Chevalley for slices of finite sets over every map between sets of
/// size at most `max` at fiber bound `bound`.
pub fn slice_beck_chevalley_suite(max: usize, bound: usize) -> SuiteSummary {
    let f = basic_indexed_category(bound);
    let maps: Vec<FinSetMap> = (0..=max).flat_map(|n| (0..=max).flat_map(move |m| all_maps(n, m))).collect();
    maps.par_iter()
        .map(|p| match crate::monadics::beck_chevalley(&f, p) {
            Ok(r) => SuiteSummary::one(false, r.invertible, || format!("{p:?}: {:?}", r.witness)),
            Err(e) => SuiteSummary::one(false, false, || format!("{p:?}: {e}")),
        })
        .reduce(SuiteSummary::default, SuiteSummary::absorb)
}

/// Effectiveness against surjectivity for every map between sets of size
/// at most `max`, at fiber bound `bound`.
pub fn slice_effective_suite(max: usize, bound: usize) -> SuiteSummary {
    let f = basic_indexed_category(bound);
    let maps: Vec<FinSetMap> = (0..=max).flat_map(|n| (0..=max).flat_map(move |m| all_maps(n, m))).collect();
    maps.par_iter()
        .map(|p| {
            let surj = p.is_surjective();
            match is_effective_descent(&f, p) {
                Ok(r) => SuiteSummary::one(false, r.effective == surj, || format!("{p:?}: effective {}", r.effective)),
                Err(e) => SuiteSummary::one(false, false, || format!("{p:?}: {e}")),
            }
        })
        .reduce(SuiteSummary::default, SuiteSummary::absorb)
}

/// The descent objects of a pseudofunctor over every object of `A(𝟣)`.
pub fn full_lax_descent<C: Category>(a: Arc<TruncCosimp<C>>) -> Arc<LaxDesc<C>> {
    let ws = a.cat(0).objects();
    Arc::new(LaxDesc::new(a, &ws))
}

/// The descent objects over `w`.
pub fn data_over<C: Category>(ld: &LaxDesc<C>, w: &C::Obj) -> Vec<DObj<C>> {
    ld.objects().into_iter().filter(|x| &x.w == w).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finset::{Slice, SliceObj};

    fn sigma_slices(m: &Monoid, bound: usize) -> Arc<LaxDesc<Slice>> {
        let a = compose_indexed_with_precategory(&basic_indexed_category(bound), &sigma_precategory(m)).unwrap();
        full_lax_descent(Arc::new(a))
    }

    #[test]
    fn constant_instance_along_identity() {
        let x = Arc::new(catalog::chain(2));
        let fam = FamIndexed { x, base_bound: 1 };
        let a = compose_indexed_with_precategory(&fam, &sigma_precategory(&Monoid::trivial())).unwrap();
        let ld = full_lax_descent(Arc::new(a));
        let mat = materialize(&ld);
        let j = mat.inclusion();
        let h = Functor::identity(j.source().clone());
        let run = verify_main_theorem_right(&ld, &j, &h);
        assert!(!run.report.vacuous() && run.report.verified(), "{:?}", run.report);
        let c = run.construction.unwrap();
        assert!(find_natural_iso(&c.j_check, &j).is_some());
        let run = verify_main_theorem_left(&ld, &j, &h);
        assert!(!run.report.vacuous() && run.report.verified(), "{:?}", run.report);
    }

    #[test]
    fn products_of_m2_sets() {
        let ld = sigma_slices(&Monoid::m2(), 2);
        let one = SliceObj::new(vec![0]);
        let two = SliceObj::new(vec![0, 0]);
        let x = data_over(&ld, &one)[0].clone();
        let y = data_over(&ld, &two)[1].clone();
        let s = Arc::new(FinCategory::discrete(2));
        let (x1, y1) = (x.clone(), y.clone());
        let ld2 = ld.clone();
        let j = Functor::new(
            s.clone(),
            ld.clone(),
            move |o: &usize| if *o == 0 { x1.clone() } else { y1.clone() },
            move |m: &usize| if *m == 0 { ld2.id(&x) } else { ld2.id(&y) },
        );
        let h = Functor::constant(s, Arc::new(FinCategory::terminal()), 0);
        let run = verify_main_theorem_right(&ld, &j, &h);
        assert!(!run.report.vacuous() && run.report.verified(), "{:?}", run.report);
        // the product of a point with a two-element M₂-set is that set
        let jc = run.construction.unwrap().j_check;
        assert_eq!(jc.ob(&0).w.total(), 2);
        // the coproduct of two points has two elements and stays within the bound
        let (p1, ld3) = (data_over(&ld, &one)[0].clone(), ld.clone());
        let s2 = Arc::new(FinCategory::discrete(2));
        let j2 = Functor::new(s2.clone(), ld.clone(), move |_: &usize| p1.clone(), move |_: &usize| ld3.id(&data_over(&ld3, &SliceObj::new(vec![0]))[0]));
        let h2 = Functor::constant(s2, Arc::new(FinCategory::terminal()), 0);
        let run = verify_main_theorem_left(&ld, &j2, &h2);
        assert!(!run.report.vacuous() && run.report.verified(), "{:?}", run.report);
        assert_eq!(run.construction.unwrap().j_check.ob(&0).w.total(), 2);
    }

    #[test]
    fn split_fork_of_an_m2_set_lifts() {
        let ld = sigma_slices(&Monoid::m2(), 2);
        let two = SliceObj::new(vec![0, 0]);
        // the action collapsing both points onto 0
        let x = data_over(&ld, &two)
            .into_iter()
            .find(|x| ld.hom(x, x).len() > 1 && ld.hom(x, x).iter().any(|m| !ld.pseudofunctor().cat(0).is_iso(&m.m)))
            .unwrap();
        let id = ld.id(&x);
        let rep = verify_absolute_creation(&ld, &id, &id);
        assert!(rep.confirmed(), "{rep:?}");
        // a pair of distinct endomorphisms of the free M₂-set
        let mut found = false;
        for y in ld.objects() {
            let hs = ld.hom(&y, &y);
            for f in &hs {
                for g in &hs {
                    if f != g {
                        let r = verify_absolute_creation(&ld, f, g);
                        if r.split {
                            assert!(r.confirmed(), "{r:?}");
                            found = true;
                        }
                    }
                }
            }
        }
        assert!(found);
    }

    #[test]
    fn monadicity_of_forgetful_functors() {
        // M₂-sets at a bound have no free functor; use a twisted family instance
        let fam = FamIndexed { x: Arc::new(catalog::iso_pair()), base_bound: 4 };
        let a = compose_indexed_with_precategory(&fam, &sigma_precategory(&Monoid::m2())).unwrap().twist(9);
        let ld = full_lax_descent(Arc::new(a));
        let mat = materialize(&ld);
        let e = mat.inclusion();
        let g = e.then(&forgetful(&ld));
        let adj = find_left_adjoint(&g);
        let r = verify_monadicity_theorem(&g, adj.as_ref(), &ld, &e);
        assert!(r.hypotheses_met() && r.verified(), "{r:?}");
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let e2 = loop {
            let e2 = random_equivalence(&mut rng, &ld);
            if e2.source().object_count() > mat.category.object_count() {
                break e2;
            }
        };
        let g2 = e2.then(&forgetful(&ld));
        let r = verify_monadicity_theorem(&g2, find_left_adjoint(&g2).as_ref(), &ld, &e2);
        assert!(r.verified(), "{r:?}");
    }

    #[test]
    fn small_random_suites() {
        for dir in [Direction::Right, Direction::Left] {
            let s = main_theorem_suite(11, 24, dir);
            assert_eq!(s.counterexamples, 0, "{s:?}");
            assert!(s.verified > 0);
        }
        let t = terminal_domain_suite(3, 12);
        assert_eq!(t.counterexamples, 0, "{t:?}");
        let t = two_lemma_suite(3, 12);
        assert_eq!(t.counterexamples, 0, "{t:?}");
        let m = monadicity_suite(3, 8);
        assert_eq!(m.counterexamples, 0, "{m:?}");
    }
}
