//! Acceptance criteria, one PASS/FAIL line each.
//!
//! Runs as a plain binary so the lines are always printed. The process fails
//! when a check fails, except for the lines listed in `KNOWN_CONFLICTS`:
//! those restate a published value that the exact computation contradicts,
//! and the computed values are asserted instead.

use std::process::ExitCode;
use std::sync::Arc;
use std::time::{Duration, Instant};

use laxdesc::delta3::{check_confluence, Delta3};
use laxdesc::descent::eq_groupoid;
use laxdesc::fincat::catalog::Monoid;
use laxdesc::fincat::{check_equivalence, Category, FinCategory, FinFunctor, Functor};
use laxdesc::finset::{basic_indexed_category, diagram_indexed_category, FinSetMap, SetDiagram, SliceObj};
use laxdesc::kan::Direction;
use laxdesc::laxdesc::{DMor, DObj};
use laxdesc::monadics::{beck_chevalley, benabou_roubaud_compare, em_category, product_monad, AlgMor, Algebra};
use laxdesc::pseudo::{compose_indexed_with_precategory, sigma_precategory, IndexedCategory};
use laxdesc::theorems::{
    full_lax_descent, main_theorem_suite, monadicity_suite, slice_beck_chevalley_suite, slice_effective_suite,
    terminal_domain_suite, two_lemma_suite, SuiteSummary,
};

// Runtime limits, per criterion.
const AC1_LIMIT: Duration = Duration::from_secs(1);
const AC2_LIMIT: Duration = Duration::from_secs(1);
const AC3_LIMIT: Duration = Duration::from_secs(30);
const AC4_LIMIT: Duration = Duration::from_secs(5);
const AC5_LIMIT: Duration = Duration::from_secs(120);
const AC6_LIMIT: Duration = Duration::from_secs(300);
const AC8_LIMIT: Duration = Duration::from_secs(600);
const AC9_LIMIT: Duration = Duration::from_secs(120);

// Sample sizes.
const AC3_BOUND: usize = 2;
const AC5_MAX: usize = 3;
const AC5_BOUND: usize = 4;
const AC6_MAX: usize = 3;
const AC6_BOUND: usize = 3;
const AC7_INSTANCES: usize = 120;
const AC8_NON_VACUOUS: usize = 500;
const AC8_BATCH: usize = 400;
const AC8_MAX_BATCHES: usize = 20;
const AC9_BOUND: usize = 4;
const AC10_NON_VACUOUS: usize = 50;
const AC10_BATCH: usize = 100;
const SEED: u64 = 2024;

const KNOWN_CONFLICTS: &[&str] = &["AC4a", "AC4c"];

struct Ledger {
    lines: Vec<(String, bool)>,
}

impl Ledger {
    fn record(&mut self, id: &str, ok: bool, detail: impl AsRef<str>) {
        println!("{id} {} {}", if ok { "PASS" } else { "FAIL" }, detail.as_ref());
        self.lines.push((id.to_string(), ok));
    }
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let t = Instant::now();
    let out = f();
    (out, t.elapsed())
}

fn ac1(l: &mut Ledger) {
    let ((sizes, confl), dt) = timed(|| (Delta3::get().hom_sizes(), check_confluence(6)));
    let expected = [[1, 2, 3], [1, 3, 6], [0, 0, 1]];
    let ok = sizes == expected && confl.0.is_none() && dt < AC1_LIMIT;
    l.record(
        "AC1",
        ok,
        format!("hom sizes {sizes:?}, confluent on {} words of length ≤ 6, {dt:.2?}", confl.1),
    );
}

fn ac2(l: &mut Ledger) {
    let d = Delta3::get();
    let (checks, dt) = timed(|| {
        [
            d.parse_word("s0.d1").ok() == Some(d.identity(0)),
            d.parse_word("D1.d0").ok() == d.parse_word("D0.d0").ok(),
            d.parse_word("D2.d1").ok() == d.parse_word("D1.d1").ok(),
        ]
    });
    l.record("AC2", checks.iter().all(|c| *c) && dt < AC2_LIMIT, format!("{checks:?}, {dt:.2?}"));
}

// Monoid homomorphisms m → End({0,1}), counted directly.
fn homs_into_end2(m: &Monoid) -> usize {
    let ends: Vec<[usize; 2]> = vec![[0, 0], [0, 1], [1, 0], [1, 1]];
    let k = m.size();
    let mut count = 0;
    let mut choice = vec![0usize; k];
    loop {
        let h = |a: usize| ends[choice[a]];
        let unit = h(0) == [0, 1];
        let mult = (0..k).all(|a| (0..k).all(|b| {
            let (ha, hb) = (h(a), h(b));
            h(m.mul(a, b)) == [ha[hb[0]], ha[hb[1]]]
        }));
        count += usize::from(unit && mult);
        let mut i = 0;
        loop {
            if i == k {
                return count;
            }
            choice[i] += 1;
            if choice[i] < 4 {
                break;
            }
            choice[i] = 0;
            i += 1;
        }
    }
}

fn ac3(l: &mut Ledger) {
    let ((ok, detail), dt) = timed(|| {
        let mut ok = true;
        let mut detail = Vec::new();
        for (name, m) in [("M2", Monoid::m2()), ("Z/2", Monoid::cyclic(2))] {
            let a = compose_indexed_with_precategory(&basic_indexed_category(AC3_BOUND), &sigma_precategory(&m)).unwrap();
            let ld = full_lax_descent(Arc::new(a));
            let two = SliceObj::new(vec![0, 0]);
            let data = ld.objects().iter().filter(|x| x.w == two).count();
            let homs = homs_into_end2(&m);
            // (w, φ) ↦ (|w|, a) with a(i, u) the second coordinate of φ(i, u)
            let monad = product_monad(&m, AC3_BOUND * m.size() * m.size());
            let carriers: Vec<usize> = (0..=AC3_BOUND).collect();
            let em = Arc::new(em_category(&monad, &carriers));
            let em2 = em.clone();
            let alg = move |x: &DObj<laxdesc::finset::Slice>| {
                let n = x.w.total();
                let action = FinSetMap { cod: n, map: x.phi.map.iter().map(|j| j % n.max(1)).collect() };
                Algebra { carrier: n, action }
            };
            let alg2 = alg.clone();
            let e = Functor::new(ld.clone(), em.clone(), alg, move |f: &DMor<laxdesc::finset::Slice>| AlgMor {
                src: alg2(&f.src),
                dst: alg2(&f.dst),
                map: f.m.underlying(),
            });
            let algebras_ok = ld.objects().iter().all(|x| {
                let a = e.ob(x);
                em2.is_algebra(&a.carrier, &a.action)
            });
            let eq = algebras_ok && check_equivalence(&e).is_equivalence();
            ok &= data == homs && eq;
            detail.push(format!("{name}: {data} data over a 2-element set, {homs} homomorphisms, equivalent {eq}"));
        }
        (ok, detail.join("; "))
    });
    l.record("AC3", ok && dt < AC3_LIMIT, format!("{detail}, {dt:.2?}"));
}

fn sizes_of(x: &SetDiagram) -> Vec<usize> {
    x.sizes.clone()
}

fn ac4(l: &mut Ledger) -> bool {
    let (out, dt) = timed(|| {
        let ix = diagram_indexed_category(vec![FinCategory::terminal(), FinCategory::discrete(2)], 2);
        let two = Arc::new(FinCategory::discrete(2));
        let h = FinFunctor::new(two, Arc::new(FinCategory::terminal()), vec![0, 0], vec![0, 0]).unwrap();
        let g = eq_groupoid(&ix.base(), &h).unwrap();
        // f = (∅, {∅})
        let f = SetDiagram { sizes: vec![0, 1], maps: vec![FinSetMap::identity(0), FinSetMap::identity(1)] };
        let lower = ix.reindex(&g.pi_lower).ob(&f);
        let across = ix.left_adjoint(&g.pi_upper).unwrap().left.ob(&lower);
        let along_same = ix.left_adjoint(&g.pi_lower).unwrap().left.ob(&lower);
        let adj = ix.left_adjoint(&h).unwrap();
        let round = ix.reindex(&h).ob(&adj.left.ob(&f));
        let bc = beck_chevalley(&ix, &h).unwrap();
        (sizes_of(&across), sizes_of(&along_same), sizes_of(&round), bc)
    });
    let (across, same, round, bc) = out;
    l.record(
        "AC4a",
        across == vec![0, 2],
        format!("lan along π^e of f∘π_e is {across:?}; the published pair (∅, {{∅}}⊔{{∅}}) has sizes [0, 2]"),
    );
    l.record("AC4b", round == vec![1, 1] && dt < AC4_LIMIT, format!("lan_h(f)∘h is {round:?}, {dt:.2?}"));
    l.record(
        "AC4c",
        !bc.invertible,
        format!("Beck–Chevalley at h: invertible {} over {} objects, witness {:?}", bc.invertible, bc.checked, bc.witness),
    );
    println!("AC4 note: lan along π_e of f∘π_e is {same:?}");
    // the exact values
    across == vec![1, 1] && same == vec![0, 2] && round == vec![1, 1] && bc.invertible
}

fn suite_line(l: &mut Ledger, id: &str, s: &SuiteSummary, min: usize, dt: Duration, limit: Option<Duration>) {
    let ok = s.counterexamples == 0 && s.non_vacuous() >= min && limit.is_none_or(|t| dt < t);
    l.record(
        id,
        ok,
        format!(
            "{} instances, {} vacuous, {} verified, {} counterexamples, {dt:.2?}{}",
            s.instances,
            s.vacuous,
            s.verified,
            s.counterexamples,
            if s.witnesses.is_empty() { String::new() } else { format!(", e.g. {}", s.witnesses[0]) }
        ),
    );
}

fn add(a: &mut SuiteSummary, b: SuiteSummary) {
    a.instances += b.instances;
    a.vacuous += b.vacuous;
    a.verified += b.verified;
    a.counterexamples += b.counterexamples;
    a.witnesses.extend(b.witnesses);
}

fn ac5(l: &mut Ledger) {
    let (s, dt) = timed(|| slice_beck_chevalley_suite(AC5_MAX, AC5_BOUND));
    suite_line(l, "AC5", &s, 1, dt, Some(AC5_LIMIT));
}

fn ac6(l: &mut Ledger) {
    let (s, dt) = timed(|| slice_effective_suite(AC6_MAX, AC6_BOUND));
    suite_line(l, "AC6", &s, 1, dt, Some(AC6_LIMIT));
}

fn ac7(l: &mut Ledger) {
    let (s, dt) = timed(|| terminal_domain_suite(SEED, AC7_INSTANCES));
    suite_line(l, "AC7a", &s, 100, dt, None);
    let (s, dt) = timed(|| two_lemma_suite(SEED, AC7_INSTANCES));
    suite_line(l, "AC7b", &s, 100, dt, None);
}

fn ac8(l: &mut Ledger) {
    let t = Instant::now();
    for (id, dir) in [("AC8a", Direction::Right), ("AC8b", Direction::Left)] {
        let (s, dt) = timed(|| {
            let mut total = SuiteSummary::default();
            for batch in 0..AC8_MAX_BATCHES as u64 {
                add(&mut total, main_theorem_suite(SEED + batch, AC8_BATCH, dir));
                if total.non_vacuous() >= AC8_NON_VACUOUS {
                    break;
                }
            }
            total
        });
        suite_line(l, id, &s, AC8_NON_VACUOUS, dt, None);
    }
    let dt = t.elapsed();
    l.record("AC8", dt < AC8_LIMIT, format!("both suites in {dt:.2?}"));
}

fn ac9(l: &mut Ledger) {
    let (r, dt) = timed(|| {
        let p = FinSetMap::new(1, vec![0, 0]).unwrap();
        benabou_roubaud_compare(&basic_indexed_category(AC9_BOUND), &p).unwrap()
    });
    l.record(
        "AC9",
        r.found && dt < AC9_LIMIT,
        format!(
            "{} descent objects, {} algebras, equivalence {}, over the fiber {}, factorizations agree {}, {dt:.2?}",
            r.descent_objects,
            r.algebras,
            r.equivalence.is_equivalence(),
            r.over_fiber,
            r.factorizations_agree
        ),
    );
}

fn ac10(l: &mut Ledger) {
    let (s, dt) = timed(|| {
        let mut total = SuiteSummary::default();
        for batch in 0..10 {
            add(&mut total, monadicity_suite(SEED + batch, AC10_BATCH));
            if total.non_vacuous() >= AC10_NON_VACUOUS {
                break;
            }
        }
        total
    });
    suite_line(l, "AC10", &s, AC10_NON_VACUOUS, dt, None);
}

fn main() -> ExitCode {
    let mut l = Ledger { lines: Vec::new() };
    ac1(&mut l);
    ac2(&mut l);
    ac3(&mut l);
    let exact = ac4(&mut l);
    ac5(&mut l);
    ac6(&mut l);
    ac7(&mut l);
    ac8(&mut l);
    ac9(&mut l);
    ac10(&mut l);
    let failed: Vec<&str> = l.lines.iter().filter(|(_, ok)| !ok).map(|(id, _)| id.as_str()).collect();
    let unexpected: Vec<&&str> = failed.iter().filter(|id| !KNOWN_CONFLICTS.contains(id)).collect();
    println!(
        "summary: {} PASS, {} FAIL{}",
        l.lines.len() - failed.len(),
        failed.len(),
        if failed.is_empty() { String::new() } else { format!(" ({})", failed.join(", ")) }
    );
    if !exact {
        println!("the exact values of the AC4 computation changed");
    }
    if unexpected.is_empty() && exact {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
