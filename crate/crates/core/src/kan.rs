//! Pointwise Kan extensions, factorization through them, and the
//! preservation, reflection and creation checks.

use std::collections::HashMap;
use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::fincat::{
    all_natural_transformations, Category, Cone, Diagram, FinCategory, Functor, Limits, NatTrans,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Right,
    Left,
}

/// The comma category `(b ↓ H)` (right) or `(H ↓ b)` (left), kept as the
/// list of its objects `(s, f)` and the non-identity generating edges.
#[derive(Clone, Debug)]
pub struct Comma<S: Category, B: Category> {
    pub direction: Direction,
    pub base: B::Obj,
    pub objects: Vec<(S::Obj, B::Mor)>,
    /// `(i, j, u)` with `u: s_i → s_j` in `S`.
    pub edges: Vec<(usize, usize, S::Mor)>,
    index: HashMap<(S::Obj, B::Mor), usize>,
}

impl<S: Category, B: Category> Comma<S, B> {
    pub fn build(h: &Functor<S, B>, b: &B::Obj, direction: Direction) -> Self {
        let s = h.source();
        let bc = h.target();
        let sobs = s.objects();
        let mut objects = Vec::new();
        for x in &sobs {
            let hx = h.ob(x);
            let arrows = match direction {
                Direction::Right => bc.hom(b, &hx),
                Direction::Left => bc.hom(&hx, b),
            };
            for f in arrows {
                objects.push((x.clone(), f));
            }
        }
        let mut edges = Vec::new();
        for (i, (si, fi)) in objects.iter().enumerate() {
            for (j, (sj, fj)) in objects.iter().enumerate() {
                for u in s.hom(si, sj) {
                    if i == j && u == s.id(si) {
                        continue;
                    }
                    let ok = match direction {
                        Direction::Right => bc.compose(&h.mor(&u), fi) == *fj,
                        Direction::Left => bc.compose(fj, &h.mor(&u)) == *fi,
                    };
                    if ok {
                        edges.push((i, j, u));
                    }
                }
            }
        }
        let index = objects.iter().cloned().enumerate().map(|(i, k)| (k, i)).collect();
        Comma { direction, base: b.clone(), objects, edges, index }
    }

    pub fn index_of(&self, s: &S::Obj, f: &B::Mor) -> Option<usize> {
        self.index.get(&(s.clone(), f.clone())).copied()
    }

    /// The diagram `J∘proj`.
    pub fn diagram<C: Category>(&self, j: &Functor<S, C>) -> Diagram<C::Obj, C::Mor> {
        Diagram {
            nodes: self.objects.iter().map(|(s, _)| j.ob(s)).collect(),
            edges: self.edges.iter().map(|(a, b, u)| (*a, *b, j.mor(u))).collect(),
        }
    }

    /// The comma category as a table category, with every morphism
    /// `(i, j, u)` (identities included), and its projection to `S`.
    pub fn category(&self, s: &Arc<S>) -> (Arc<FinCategory>, Functor<FinCategory, S>) {
        let mut arrows: Vec<(usize, usize, S::Mor)> = Vec::new();
        for (i, (si, _)) in self.objects.iter().enumerate() {
            arrows.push((i, i, s.id(si)));
        }
        for e in &self.edges {
            arrows.push(e.clone());
        }
        arrows.sort_by(|a, b| (a.0, a.1, &a.2).cmp(&(b.0, b.1, &b.2)));
        arrows.dedup();
        let n = self.objects.len();
        let pos: HashMap<(usize, usize, S::Mor), usize> =
            arrows.iter().cloned().enumerate().map(|(k, a)| (a, k)).collect();
        let ids: Vec<usize> = (0..n).map(|i| pos[&(i, i, s.id(&self.objects[i].0))]).collect();
        let mut comp = Vec::new();
        for (f, (a, b, u)) in arrows.iter().enumerate() {
            for (g, (b2, c, v)) in arrows.iter().enumerate() {
                if b == b2 {
                    let key = (*a, *c, s.compose(v, u));
                    comp.push((g, f, pos[&key]));
                }
            }
        }
        let typing: Vec<(usize, usize)> = arrows.iter().map(|(a, b, _)| (*a, *b)).collect();
        let cat = Arc::new(
            FinCategory::from_tables(n, &typing, &ids, &comp).expect("comma category tables are complete"),
        );
        let obs: Vec<S::Obj> = self.objects.iter().map(|(x, _)| x.clone()).collect();
        let ms: Vec<S::Mor> = arrows.into_iter().map(|(_, _, u)| u).collect();
        let proj = Functor::new(cat.clone(), s.clone(), move |i| obs[*i].clone(), move |k| ms[*k].clone());
        (cat, proj)
    }
}

/// The (co)limit computed at one object of `B`.
#[derive(Clone, Debug)]
pub struct Pointwise<S: Category, B: Category, C: Category> {
    pub comma: Comma<S, B>,
    pub diagram: Diagram<C::Obj, C::Mor>,
    pub cone: Option<Cone<C::Obj, C::Mor>>,
}

type Points<S, B, C> = Arc<HashMap<<B as Category>::Obj, Pointwise<S, B, C>>>;

/// `ran_H J` with `γ: ran_H J ∘ H ⇒ J`, or `lan_H J` with `η: J ⇒ lan_H J ∘ H`.
#[derive(Clone, Debug)]
pub struct KanExtension<S: Category, B: Category, C: Limits> {
    pub direction: Direction,
    pub along: Functor<S, B>,
    pub of: Functor<S, C>,
    pub value: Option<Functor<B, C>>,
    pub universal: Option<NatTrans<S, C>>,
    pub exists: bool,
    pub failure_witness: Option<B::Obj>,
    points: Points<S, B, C>,
}

impl<S: Category, B: Category, C: Limits> KanExtension<S, B, C> {
    pub fn value(&self) -> Result<&Functor<B, C>> {
        self.value.as_ref().ok_or_else(|| self.missing())
    }

    pub fn universal(&self) -> Result<&NatTrans<S, C>> {
        self.universal.as_ref().ok_or_else(|| self.missing())
    }

    pub fn point(&self, b: &B::Obj) -> Option<&Pointwise<S, B, C>> {
        self.points.get(b)
    }

    fn missing(&self) -> Error {
        Error::Invalid(format!(
            "the {} Kan extension does not exist (no {} at {:?})",
            if self.direction == Direction::Right { "right" } else { "left" },
            if self.direction == Direction::Right { "limit" } else { "colimit" },
            self.failure_witness
        ))
    }
}

fn compute_points<S: Category, B: Category, C: Limits>(
    j: &Functor<S, C>,
    h: &Functor<S, B>,
    direction: Direction,
) -> (Vec<B::Obj>, HashMap<B::Obj, Pointwise<S, B, C>>) {
    let c = j.target().clone();
    let bobs = h.target().objects();
    let pts: Vec<Pointwise<S, B, C>> = bobs
        .par_iter()
        .map(|b| {
            let comma = Comma::build(h, b, direction);
            let diagram = comma.diagram(j);
            let cone = match direction {
                Direction::Right => c.limit(&diagram),
                Direction::Left => c.colimit(&diagram),
            };
            Pointwise { comma, diagram, cone }
        })
        .collect();
    let map = bobs.iter().cloned().zip(pts).collect();
    (bobs, map)
}

/// The pointwise right Kan extension of `j` along `h`: at `b`, the limit of
/// `J∘proj` over `(b ↓ H)`.
pub fn right_kan<S: Category, B: Category, C: Limits>(j: &Functor<S, C>, h: &Functor<S, B>) -> KanExtension<S, B, C> {
    kan(j, h, Direction::Right)
}

/// The pointwise left Kan extension: at `b`, the colimit over `(H ↓ b)`.
pub fn left_kan<S: Category, B: Category, C: Limits>(j: &Functor<S, C>, h: &Functor<S, B>) -> KanExtension<S, B, C> {
    kan(j, h, Direction::Left)
}

fn kan<S: Category, B: Category, C: Limits>(
    j: &Functor<S, C>,
    h: &Functor<S, B>,
    direction: Direction,
) -> KanExtension<S, B, C> {
    let (bobs, map) = compute_points(j, h, direction);
    let witness = bobs.iter().find(|b| map[*b].cone.is_none()).cloned();
    let points: Points<S, B, C> = Arc::new(map);
    let mut ke = KanExtension {
        direction,
        along: h.clone(),
        of: j.clone(),
        value: None,
        universal: None,
        exists: witness.is_none(),
        failure_witness: witness,
        points: points.clone(),
    };
    if !ke.exists {
        return ke;
    }
    let c = j.target().clone();
    let bcat = h.target().clone();
    let p1 = points.clone();
    let p2 = points.clone();
    let c2 = c.clone();
    let bcat2 = bcat.clone();
    let value = Functor::new(
        bcat.clone(),
        c.clone(),
        move |b| p1[b].cone.as_ref().expect("chosen (co)limit").apex.clone(),
        move |u| {
            let (x, y) = (bcat2.dom(u), bcat2.cod(u));
            let (px, py) = (&p2[&x], &p2[&y]);
            let (cx, cy) = (px.cone.as_ref().unwrap(), py.cone.as_ref().unwrap());
            match direction {
                Direction::Right => {
                    // legs at (s, f') of (y ↓ H) come from (s, f'∘u) of (x ↓ H)
                    let legs = py
                        .comma
                        .objects
                        .iter()
                        .map(|(s, f)| cx.legs[px.comma.index_of(s, &bcat2.compose(f, u)).unwrap()].clone())
                        .collect();
                    let cone = Cone { apex: cx.apex.clone(), legs };
                    c2.mediate(&py.diagram, cy, &cone).expect("mediating morphism")
                }
                Direction::Left => {
                    let legs = px
                        .comma
                        .objects
                        .iter()
                        .map(|(s, f)| cy.legs[py.comma.index_of(s, &bcat2.compose(u, f)).unwrap()].clone())
                        .collect();
                    let cocone = Cone { apex: cy.apex.clone(), legs };
                    c2.comediate(&px.diagram, cx, &cocone).expect("comediating morphism")
                }
            }
        },
    )
    .cached();
    let hv = h.clone();
    let p3 = points.clone();
    let comp = move |s: &S::Obj| {
        let hs = hv.ob(s);
        let p = &p3[&hs];
        let k = p.comma.index_of(s, &hv.target().id(&hs)).expect("identity in comma");
        p.cone.as_ref().unwrap().legs[k].clone()
    };
    let vh = h.then(&value);
    let universal = match direction {
        Direction::Right => NatTrans::new(vh, j.clone(), comp),
        Direction::Left => NatTrans::new(j.clone(), vh, comp),
    };
    ke.value = Some(value);
    ke.universal = Some(universal.cached());
    ke
}

fn cone_commutes<C: Category>(c: &C, d: &Diagram<C::Obj, C::Mor>, legs: &[C::Mor], colimit: bool) -> bool {
    d.edges.iter().all(|(i, j, e)| {
        if colimit {
            c.compose(&legs[*j], e) == legs[*i]
        } else {
            c.compose(e, &legs[*i]) == legs[*j]
        }
    })
}

fn check_typing<S: Category, C: Category>(
    alpha: &NatTrans<S, C>,
    src: &Functor<S, C>,
    dst: &Functor<S, C>,
) -> Result<()> {
    let c = src.target();
    for s in src.source().objects() {
        let a = alpha.at(&s);
        if c.dom(&a) != src.ob(&s) || c.cod(&a) != dst.ob(&s) {
            return Err(Error::Invalid(format!("2-cell component at {s:?} has the wrong type")));
        }
    }
    Ok(())
}

/// The unique `β: Q ⇒ ran_H J` with `γ·(β∗H) = α`, for `α: Q∘H ⇒ J`.
pub fn factor_through_ran<S: Category, B: Category, C: Limits>(
    ke: &KanExtension<S, B, C>,
    q: &Functor<B, C>,
    alpha: &NatTrans<S, C>,
) -> Result<NatTrans<B, C>> {
    if ke.direction != Direction::Right {
        return Err(Error::Invalid("factor_through_ran needs a right Kan extension".into()));
    }
    let value = ke.value()?.clone();
    check_typing(alpha, &ke.along.then(q), &ke.of)?;
    factor(ke, q, alpha, value.clone(), false).map(|comps| NatTrans::from_table(q.clone(), value, comps))
}

/// The unique `β: lan_H J ⇒ Q` with `(β∗H)·η = α`, for `α: J ⇒ Q∘H`.
pub fn factor_through_lan<S: Category, B: Category, C: Limits>(
    ke: &KanExtension<S, B, C>,
    q: &Functor<B, C>,
    alpha: &NatTrans<S, C>,
) -> Result<NatTrans<B, C>> {
    if ke.direction != Direction::Left {
        return Err(Error::Invalid("factor_through_lan needs a left Kan extension".into()));
    }
    let value = ke.value()?.clone();
    check_typing(alpha, &ke.of, &ke.along.then(q))?;
    factor(ke, q, alpha, value.clone(), true).map(|comps| NatTrans::from_table(value, q.clone(), comps))
}

fn factor<S: Category, B: Category, C: Limits>(
    ke: &KanExtension<S, B, C>,
    q: &Functor<B, C>,
    alpha: &NatTrans<S, C>,
    _value: Functor<B, C>,
    left: bool,
) -> Result<HashMap<B::Obj, C::Mor>> {
    let c = ke.of.target();
    let mut out = HashMap::new();
    for b in ke.along.target().objects() {
        let p = &ke.points[&b];
        let lim = p.cone.as_ref().unwrap();
        let legs: Vec<C::Mor> = p
            .comma
            .objects
            .iter()
            .map(|(s, f)| {
                if left {
                    c.compose(&q.mor(f), &alpha.at(s))
                } else {
                    c.compose(&alpha.at(s), &q.mor(f))
                }
            })
            .collect();
        if !cone_commutes(c.as_ref(), &p.diagram, &legs, left) {
            return Err(Error::NoMediator(format!("induced {} at {b:?} does not commute", if left { "cocone" } else { "cone" })));
        }
        let cone = Cone { apex: q.ob(&b), legs };
        let m = if left { c.comediate(&p.diagram, lim, &cone) } else { c.mediate(&p.diagram, lim, &cone) };
        out.insert(b.clone(), m.ok_or_else(|| Error::NoMediator(format!("no unique mediator at {b:?}")))?);
    }
    Ok(out)
}

/// The canonical comparison `G∘ran_H J ⇒ ran_H(G∘J)` (right) or
/// `lan_H(G∘J) ⇒ G∘lan_H J` (left), when the target extension exists.
pub fn comparison_cell<S: Category, B: Category, C: Limits, D: Limits>(
    g: &Functor<C, D>,
    ke: &KanExtension<S, B, C>,
) -> Result<NatTrans<B, D>> {
    let value = ke.value()?;
    let gj = ke.of.then(g);
    let q = value.then(g);
    let alpha = ke.universal()?.whisker_left(g);
    match ke.direction {
        Direction::Right => factor_through_ran(&right_kan(&gj, &ke.along), &q, &alpha),
        Direction::Left => factor_through_lan(&left_kan(&gj, &ke.along), &q, &alpha),
    }
}

/// Whether `g` preserves the Kan extension: the comparison cell exists and
/// is invertible. False when the extension of `G∘J` does not exist.
pub fn preserves<S: Category, B: Category, C: Limits, D: Limits>(
    g: &Functor<C, D>,
    ke: &KanExtension<S, B, C>,
) -> bool {
    if !ke.exists {
        return false;
    }
    match comparison_cell(g, ke) {
        Ok(beta) => beta.invertibility_witness().is_none(),
        Err(_) => false,
    }
}

/// Whether `(r, gamma)` is a right Kan extension of `j` along `h`, tested
/// against the computed one: the induced comparison must be invertible.
pub fn is_right_kan<S: Category, B: Category, C: Limits>(
    ke: &KanExtension<S, B, C>,
    r: &Functor<B, C>,
    gamma: &NatTrans<S, C>,
) -> bool {
    ke.exists
        && factor_through_ran(ke, r, gamma).is_ok_and(|beta| beta.invertibility_witness().is_none())
}

/// Outcome of [`creates`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CreationReport {
    /// `ran_H J0` exists upstairs.
    pub exists: bool,
    /// `G` preserves it.
    pub preserved: bool,
    /// Every lift of `ran_H(G∘J0)` is itself a right Kan extension.
    pub reflects: bool,
    /// `ran_H(G∘J0)` exists downstairs.
    pub exists_below: bool,
    /// Number of strict lifts found.
    pub lifts: usize,
    pub witness: Option<String>,
}

impl CreationReport {
    pub fn creates(&self) -> bool {
        self.exists && self.preserved && self.reflects
    }
}

/// Checks that `g` creates the right Kan extension of `G∘J0` along `h`.
///
/// Reflection is checked over every strict lift `(R, ν)` with `G∘R = ran`
/// and `G∗ν = γ` on the enumerated objects and morphisms.
pub fn creates<S: Category, B: Category, C: Limits, D: Limits>(
    g: &Functor<C, D>,
    j0: &Functor<S, C>,
    h: &Functor<S, B>,
) -> CreationReport {
    let up = right_kan(j0, h);
    let down = right_kan(&j0.then(g), h);
    let preserved = up.exists && preserves(g, &up);
    let mut report = CreationReport {
        exists: up.exists,
        preserved,
        reflects: true,
        exists_below: down.exists,
        lifts: 0,
        witness: None,
    };
    if !down.exists {
        return report;
    }
    let lifts = strict_lifts(g, j0, &down);
    report.lifts = lifts.len();
    for (k, (r, nu)) in lifts.iter().enumerate() {
        if !is_right_kan(&up, r, nu) {
            report.reflects = false;
            report.witness = Some(format!("lift #{k} is not a right Kan extension"));
            break;
        }
    }
    report
}

/// Every `(R, ν)` with `R: B → C`, `ν: R∘H ⇒ J0`, `G∘R = value` and
/// `G∗ν = γ`, over the enumerated objects and morphisms of `B`.
#[allow(clippy::type_complexity)]
pub fn strict_lifts<S: Category, B: Category, C: Limits, D: Limits>(
    g: &Functor<C, D>,
    j0: &Functor<S, C>,
    down: &KanExtension<S, B, D>,
) -> Vec<(Functor<B, C>, NatTrans<S, C>)> {
    let (Ok(value), Ok(gamma)) = (down.value(), down.universal()) else {
        return Vec::new();
    };
    let c = g.source().clone();
    let b = down.along.target().clone();
    let h = down.along.clone();
    let bobs = b.objects();
    let cobs = c.objects();
    let ob_cands: Vec<Vec<C::Obj>> =
        bobs.iter().map(|x| cobs.iter().filter(|y| g.ob(y) == value.ob(x)).cloned().collect()).collect();
    let bmors: Vec<B::Mor> = crate::fincat::all_morphisms(b.as_ref());
    let mut out = Vec::new();
    let mut choice = vec![0usize; bobs.len()];
    if ob_cands.iter().any(|v| v.is_empty()) {
        return out;
    }
    loop {
        let obmap: HashMap<B::Obj, C::Obj> =
            bobs.iter().enumerate().map(|(i, x)| (x.clone(), ob_cands[i][choice[i]].clone())).collect();
        let mor_cands: Vec<Vec<C::Mor>> = bmors
            .iter()
            .map(|u| {
                c.hom(&obmap[&b.dom(u)], &obmap[&b.cod(u)])
                    .into_iter()
                    .filter(|m| g.mor(m) == value.mor(u))
                    .collect()
            })
            .collect();
        if mor_cands.iter().all(|v| !v.is_empty()) {
            let mut mc = vec![0usize; bmors.len()];
            loop {
                let mormap: HashMap<B::Mor, C::Mor> =
                    bmors.iter().enumerate().map(|(i, u)| (u.clone(), mor_cands[i][mc[i]].clone())).collect();
                let functorial = bobs.iter().all(|x| mormap[&b.id(x)] == c.id(&obmap[x]))
                    && bmors.iter().all(|u| {
                        bmors.iter().all(|v| {
                            b.cod(u) != b.dom(v)
                                || mormap[&b.compose(v, u)] == c.compose(&mormap[v], &mormap[u])
                        })
                    });
                if functorial {
                    let (om, mm) = (obmap.clone(), mormap);
                    let r = Functor::new(b.clone(), c.clone(), move |x| om[x].clone(), move |u| mm[u].clone());
                    for nu in lifts_of_gamma(g, j0, &h, &r, gamma) {
                        out.push((r.clone(), nu));
                    }
                }
                if !advance(&mut mc, &mor_cands.iter().map(|v| v.len()).collect::<Vec<_>>()) {
                    break;
                }
            }
        }
        if !advance(&mut choice, &ob_cands.iter().map(|v| v.len()).collect::<Vec<_>>()) {
            break;
        }
    }
    out
}

// Steps a mixed-radix counter; false once it wraps around.
fn advance(idx: &mut [usize], sizes: &[usize]) -> bool {
    for i in (0..idx.len()).rev() {
        idx[i] += 1;
        if idx[i] < sizes[i] {
            return true;
        }
        idx[i] = 0;
    }
    false
}

fn lifts_of_gamma<S: Category, B: Category, C: Category, D: Category>(
    g: &Functor<C, D>,
    j0: &Functor<S, C>,
    h: &Functor<S, B>,
    r: &Functor<B, C>,
    gamma: &NatTrans<S, D>,
) -> Vec<NatTrans<S, C>> {
    let rh = h.then(r);
    all_natural_transformations(&rh, j0, None)
        .into_iter()
        .filter(|nu| h.source().objects().iter().all(|s| g.mor(&nu.at(s)) == gamma.at(s)))
        .collect()
}

/// A split fork `f, g: x ⇉ y`, `q: y → z` with `s: z → y`, `t: y → x`
/// satisfying `q∘f = q∘g`, `q∘s = 1`, `f∘t = 1`, `g∘t = s∘q`.
///
/// This is the standard identity set for split coequalizers; `q` is then an
/// absolute coequalizer of `f` and `g`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SplitFork<M> {
    pub f: M,
    pub g: M,
    pub q: M,
    pub s: M,
    pub t: M,
}

pub fn is_split_fork<C: Category>(c: &C, fk: &SplitFork<C::Mor>) -> bool {
    let (x, y) = (c.dom(&fk.f), c.cod(&fk.f));
    if c.dom(&fk.g) != x || c.cod(&fk.g) != y || c.dom(&fk.q) != y {
        return false;
    }
    let z = c.cod(&fk.q);
    if c.dom(&fk.s) != z || c.cod(&fk.s) != y || c.dom(&fk.t) != y || c.cod(&fk.t) != x {
        return false;
    }
    c.compose(&fk.q, &fk.f) == c.compose(&fk.q, &fk.g)
        && c.compose(&fk.q, &fk.s) == c.id(&z)
        && c.compose(&fk.f, &fk.t) == c.id(&y)
        && c.compose(&fk.g, &fk.t) == c.compose(&fk.s, &fk.q)
}

/// Every split fork on the parallel pair `f, g`, over the enumerated objects.
pub fn split_forks_of<C: Category>(c: &C, f: &C::Mor, g: &C::Mor) -> Vec<SplitFork<C::Mor>> {
    let (x, y) = (c.dom(f), c.cod(f));
    if c.dom(g) != x || c.cod(g) != y {
        return Vec::new();
    }
    let ts: Vec<C::Mor> = c.hom(&y, &x).into_iter().filter(|t| c.compose(f, t) == c.id(&y)).collect();
    if ts.is_empty() {
        return Vec::new();
    }
    let mut out = Vec::new();
    for z in c.objects() {
        for q in c.hom(&y, &z) {
            if c.compose(&q, f) != c.compose(&q, g) {
                continue;
            }
            for s in c.hom(&z, &y) {
                if c.compose(&q, &s) != c.id(&z) {
                    continue;
                }
                for t in &ts {
                    if c.compose(g, t) == c.compose(&s, &q) {
                        out.push(SplitFork { f: f.clone(), g: g.clone(), q: q.clone(), s: s.clone(), t: t.clone() });
                    }
                }
            }
        }
    }
    out
}

/// Every split fork in `c`, over the enumerated objects.
pub fn split_forks<C: Category>(c: &C) -> Vec<SplitFork<C::Mor>> {
    let obs = c.objects();
    let mut out = Vec::new();
    for x in &obs {
        for y in &obs {
            let hom = c.hom(x, y);
            for f in &hom {
                for g in &hom {
                    out.extend(split_forks_of(c, f, g));
                }
            }
        }
    }
    out
}

/// The coequalizer diagram of a parallel pair.
pub fn pair_diagram<C: Category>(c: &C, f: &C::Mor, g: &C::Mor) -> Diagram<C::Obj, C::Mor> {
    Diagram { nodes: vec![c.dom(f), c.cod(f)], edges: vec![(0, 1, f.clone()), (0, 1, g.clone())] }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::{all_functors, catalog, check_functor, check_natural, FinFunctor};
    use crate::finset::{FinSet, FinSetMap};

    fn fin(c: FinCategory) -> Arc<FinCategory> {
        Arc::new(c)
    }

    fn table(s: &Arc<FinCategory>, t: &Arc<FinCategory>, ob: Vec<usize>, mor: Vec<usize>) -> Functor<FinCategory, FinCategory> {
        FinFunctor::new(s.clone(), t.clone(), ob, mor).unwrap().to_functor()
    }

    #[test]
    fn along_the_point_is_the_limit() {
        // cospan 0 → 2 ← 1 sent to [0,1,1]: 3 → 2 and [1,0]: 2 → 2
        let s = fin(catalog::cospan());
        let one = fin(FinCategory::terminal());
        let set = Arc::new(FinSet::new(8));
        let sizes = [3usize, 2, 2];
        let mors = s.morphisms();
        let j = Functor::new(s.clone(), set.clone(), move |x| sizes[*x], move |f| {
            let (a, b) = mors[*f];
            match (a, b) {
                (0, 2) => FinSetMap::new(2, vec![0, 1, 1]).unwrap(),
                (1, 2) => FinSetMap::new(2, vec![1, 0]).unwrap(),
                _ => FinSetMap::identity(sizes[a]),
            }
        });
        let h = Functor::constant(s.clone(), one.clone(), 0);
        let ke = right_kan(&j, &h);
        assert!(ke.exists);
        let d = Diagram {
            nodes: sizes.to_vec(),
            edges: s
                .morphisms()
                .iter()
                .enumerate()
                .filter(|(_, (a, b))| a != b)
                .map(|(k, (a, b))| (*a, *b, j.mor(&k)))
                .collect(),
        };
        let lim = set.limit(&d).unwrap();
        assert_eq!(ke.value().unwrap().ob(&0), lim.apex);
        // the pullback pairs (0,1), (1,0), (2,0)
        assert_eq!(lim.apex, 3);
    }

    #[test]
    fn along_identity_recovers_the_functor() {
        for c in catalog::small_catalog() {
            let c = fin(c);
            let target = fin(catalog::chain(3));
            let mut rng = rand::SeedableRng::seed_from_u64(7);
            let rng: &mut rand_chacha::ChaCha8Rng = &mut rng;
            let Some(j) = crate::fincat::random_functor(&c, &target, rng, 10_000) else { continue };
            let h = Functor::identity(c.clone());
            for ke in [right_kan(&j, &h), left_kan(&j, &h)] {
                assert!(ke.exists);
                assert!(check_functor(ke.value().unwrap()).is_ok());
                let u = ke.universal().unwrap();
                assert!(check_natural(u).is_ok());
                assert!(u.invertibility_witness().is_none());
            }
        }
    }

    #[test]
    fn universal_bijection_on_small_instances() {
        // H: discrete 2 → arrow, J: discrete 2 → chain 3
        let s = fin(FinCategory::discrete(2));
        let b = fin(catalog::arrow());
        let c = fin(catalog::chain(3));
        let h = table(&s, &b, vec![0, 1], vec![b.identity_of(0), b.identity_of(1)]);
        for (x, y) in [(0, 0), (1, 0), (2, 1), (0, 2)] {
            let j = table(&s, &c, vec![x, y], vec![c.identity_of(x), c.identity_of(y)]);
            for ke in [right_kan(&j, &h), left_kan(&j, &h)] {
                assert!(ke.exists);
                let value = ke.value().unwrap();
                let u = ke.universal().unwrap();
                assert!(check_natural(u).is_ok());
                for r in all_functors(&b, &c, None) {
                    let rh = h.then(&r);
                    let (lhs, rhs) = match ke.direction {
                        Direction::Right => (
                            all_natural_transformations(&r, value, None).len(),
                            all_natural_transformations(&rh, &j, None).len(),
                        ),
                        Direction::Left => (
                            all_natural_transformations(value, &r, None).len(),
                            all_natural_transformations(&j, &rh, None).len(),
                        ),
                    };
                    assert_eq!(lhs, rhs);
                    let alphas = match ke.direction {
                        Direction::Right => all_natural_transformations(&rh, &j, None),
                        Direction::Left => all_natural_transformations(&j, &rh, None),
                    };
                    for a in alphas {
                        let beta = match ke.direction {
                            Direction::Right => factor_through_ran(&ke, &r, &a).unwrap(),
                            Direction::Left => factor_through_lan(&ke, &r, &a).unwrap(),
                        };
                        for sx in s.objects() {
                            let back = match ke.direction {
                                Direction::Right => c.compose(&u.at(&sx), &beta.at(&h.ob(&sx))),
                                Direction::Left => c.compose(&beta.at(&h.ob(&sx)), &u.at(&sx)),
                            };
                            assert_eq!(back, a.at(&sx));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn factoring_the_universal_cell_gives_the_identity() {
        let s = fin(catalog::span());
        let b = fin(catalog::arrow());
        let c = fin(catalog::chain(3));
        for h in all_functors(&s, &b, None) {
            for j in all_functors(&s, &c, Some(6)) {
                let ke = right_kan(&j, &h);
                if !ke.exists {
                    continue;
                }
                let beta = factor_through_ran(&ke, ke.value().unwrap(), ke.universal().unwrap()).unwrap();
                for x in b.objects() {
                    assert_eq!(beta.at(&x), c.id(&ke.value().unwrap().ob(&x)));
                }
            }
        }
    }

    #[test]
    fn left_kan_is_right_kan_in_opposites() {
        let s = fin(catalog::span());
        let b = fin(catalog::arrow());
        let c = fin(catalog::chain(3));
        for h in all_functors(&s, &b, None) {
            for j in all_functors(&s, &c, None) {
                let lan = left_kan(&j, &h);
                let ran = right_kan(&j.op(), &h.op());
                assert_eq!(lan.exists, ran.exists);
                if !lan.exists {
                    continue;
                }
                for x in b.objects() {
                    assert_eq!(lan.value().unwrap().ob(&x), ran.value().unwrap().ob(&x));
                }
                for f in 0..b.morphism_count() {
                    assert_eq!(lan.value().unwrap().mor(&f), ran.value().unwrap().mor(&f));
                }
                for x in s.objects() {
                    assert_eq!(lan.universal().unwrap().at(&x), ran.universal().unwrap().at(&x));
                }
            }
        }
    }

    fn monotone(src: &Arc<FinCategory>, dst: &Arc<FinCategory>, m: Vec<usize>) -> Functor<FinCategory, FinCategory> {
        let (c, t) = (src.clone(), dst.clone());
        let m2 = m.clone();
        Functor::new(src.clone(), dst.clone(), move |x| m[*x], move |f| t.hom(&m2[c.dom(f)], &m2[c.cod(f)])[0])
    }

    #[test]
    fn preservation_and_creation() {
        let s = fin(FinCategory::discrete(2));
        let one = fin(FinCategory::terminal());
        let h = Functor::constant(s.clone(), one.clone(), 0);
        // 0 ≤ 1, 0 ≤ 2: the product of 1 and 2 is 0
        let v = fin(catalog::preorder(3, |a, b| a == b || a == 0));
        let j = table(&s, &v, vec![1, 2], vec![v.identity_of(1), v.identity_of(2)]);
        let ke = right_kan(&j, &h);
        assert_eq!(ke.value().unwrap().ob(&0), 0);
        assert!(preserves(&Functor::identity(v.clone()), &ke));
        let two = fin(catalog::chain(2));
        let split = monotone(&v, &two, vec![0, 0, 1]);
        assert!(check_functor(&split).is_ok());
        assert!(preserves(&split, &ke));
        let collapse = monotone(&v, &two, vec![0, 1, 1]);
        assert!(check_functor(&collapse).is_ok());
        assert!(!preserves(&collapse, &ke));
        assert!(comparison_cell(&collapse, &ke).is_ok());

        let rep = creates(&Functor::identity(v.clone()), &j, &h);
        assert!(rep.creates());
        assert_eq!(rep.lifts, 1);
        // in the V the only lower bound is the meet
        let rep = creates(&Functor::constant(v.clone(), one.clone(), 0), &j, &h);
        assert!(rep.exists && rep.preserved && rep.reflects);
        assert_eq!(rep.lifts, 1);
        // in a chain a functor to the point lifts every lower bound
        let c = fin(catalog::chain(3));
        let j = table(&s, &c, vec![1, 2], vec![c.identity_of(1), c.identity_of(2)]);
        let rep = creates(&Functor::constant(c.clone(), one.clone(), 0), &j, &h);
        assert_eq!(rep.lifts, 2);
        assert!(!rep.reflects);
    }

    #[test]
    fn split_forks() {
        let c = catalog::retraction();
        for f in 0..c.morphism_count() {
            let forks = split_forks_of(&c, &f, &f);
            assert!(forks.iter().all(|fk| is_split_fork(&c, fk)));
        }
        let x = c.objects()[0];
        let idx = c.id(&x);
        assert!(split_forks_of(&c, &idx, &idx).iter().any(|fk| fk.q == idx));
        // in sets, the coequalizer of two distinct points of 2 is not split
        let set = FinSet::new(3);
        let f = FinSetMap::new(2, vec![0]).unwrap();
        let g = FinSetMap::new(2, vec![1]).unwrap();
        assert!(set.colimit(&pair_diagram(&set, &f, &g)).is_some());
        assert!(split_forks_of(&set, &f, &g).is_empty());
    }
}
