use std::collections::HashMap;
use std::sync::Arc;

use super::indexed::{identity_cell, mix_key};
use crate::delta3::{Delta3, Gen};
use crate::error::{Error, Result};
use crate::fincat::{Category, Functor, LawReport, NatTrans};

/// A pseudofunctor `A: Δ₃ → Cat` with fibers of type `C`.
///
/// `on_mor` holds a functor for every morphism of `Δ₃` (indexed by the ids of
/// [`Delta3`]). For composable `g: x → y`, `h: y → z` the cell
/// `coh_comp[(h, g)]` is `A(h)∘A(g) ⇒ A(h∘g)`, and `coh_id[x]` is
/// `id ⇒ A(id_x)`.
pub struct TruncCosimp<C: Category> {
    cats: [Arc<C>; 3],
    on_mor: Vec<Functor<C, C>>,
    coh_comp: HashMap<(usize, usize), NatTrans<C, C>>,
    coh_id: Vec<NatTrans<C, C>>,
}

impl<C: Category> Clone for TruncCosimp<C> {
    fn clone(&self) -> Self {
        TruncCosimp {
            cats: self.cats.clone(),
            on_mor: self.on_mor.clone(),
            coh_comp: self.coh_comp.clone(),
            coh_id: self.coh_id.clone(),
        }
    }
}

impl<C: Category> TruncCosimp<C> {
    /// Checks that every morphism and composable pair has its data.
    pub fn new(
        cats: [Arc<C>; 3],
        on_mor: Vec<Functor<C, C>>,
        coh_comp: HashMap<(usize, usize), NatTrans<C, C>>,
        coh_id: Vec<NatTrans<C, C>>,
    ) -> Result<Self> {
        let d = Delta3::get();
        if on_mor.len() != d.count() {
            return Err(Error::Structural(format!("{} functors for {} morphisms of Δ₃", on_mor.len(), d.count())));
        }
        if coh_id.len() != 3 {
            return Err(Error::Structural("identity coherence needs three cells".into()));
        }
        for (h, g) in d.composable_pairs() {
            if !coh_comp.contains_key(&(h, g)) {
                return Err(Error::Structural(format!(
                    "missing coherence cell for ({}, {})",
                    d.name(h),
                    d.name(g)
                )));
            }
        }
        Ok(TruncCosimp { cats, on_mor, coh_comp, coh_id })
    }

    /// Images of all morphisms from the generators, composed along normal
    /// forms, with identity coherence cells. Valid exactly when the
    /// generator images satisfy the relations of `Δ₃` strictly.
    pub fn from_generators(cats: [Arc<C>; 3], gens: &HashMap<Gen, Functor<C, C>>) -> Result<Self> {
        let d = Delta3::get();
        let mut on_mor = Vec::with_capacity(d.count());
        for m in &d.morphisms {
            let mut f = Functor::identity(cats[m.dom].clone());
            for g in m.word.iter().rev() {
                let img = gens
                    .get(g)
                    .ok_or_else(|| Error::Structural(format!("no image for generator {}", g.name())))?;
                f = f.then(img);
            }
            on_mor.push(f.cached());
        }
        Ok(Self::strict(cats, on_mor))
    }

    /// Identity coherence cells for functors assumed strictly functorial.
    pub fn strict(cats: [Arc<C>; 3], on_mor: Vec<Functor<C, C>>) -> Self {
        let d = Delta3::get();
        let mut coh_comp = HashMap::new();
        for (h, g) in d.composable_pairs() {
            let hg = d.category.compose(&h, &g);
            coh_comp.insert((h, g), identity_cell(on_mor[g].then(&on_mor[h]), on_mor[hg].clone()));
        }
        let coh_id = (0..3)
            .map(|x| identity_cell(Functor::identity(cats[x].clone()), on_mor[d.identity(x)].clone()))
            .collect();
        TruncCosimp { cats, on_mor, coh_comp, coh_id }
    }

    /// `A(𝟣)`, `A(𝟤)`, `A(𝟥)` for `x = 0, 1, 2`.
    pub fn cat(&self, x: usize) -> &Arc<C> {
        &self.cats[x]
    }

    pub fn on(&self, f: usize) -> &Functor<C, C> {
        &self.on_mor[f]
    }

    pub fn gen(&self, g: Gen) -> &Functor<C, C> {
        &self.on_mor[Delta3::get().gen(g)]
    }

    /// `𝔞_{hg}: A(h)∘A(g) ⇒ A(hg)`.
    pub fn cell(&self, h: usize, g: usize) -> &NatTrans<C, C> {
        &self.coh_comp[&(h, g)]
    }

    pub fn gen_cell(&self, h: Gen, g: Gen) -> &NatTrans<C, C> {
        let d = Delta3::get();
        self.cell(d.gen(h), d.gen(g))
    }

    /// `𝔞_x: id ⇒ A(id_x)`.
    pub fn identity_cell(&self, x: usize) -> &NatTrans<C, C> {
        &self.coh_id[x]
    }

    /// Conjugates every structure functor by isomorphisms chosen with
    /// `pick_iso`, transporting the coherence cells. The result is
    /// equivalent to `self` and valid whenever `self` is.
    pub fn twist(&self, seed: u64) -> TruncCosimp<C> {
        let d = Delta3::get();
        let thetas: Vec<NatTrans<C, C>> = (0..d.count())
            .map(|h| {
                let ah = self.on_mor[h].clone();
                let t = ah.target().clone();
                let ah2 = ah.clone();
                let pick = Arc::new(move |o: &C::Obj| t.pick_iso(&ah2.ob(o), mix_key(seed, &(h, o))));
                let (p1, p2, p3) = (pick.clone(), pick.clone(), pick.clone());
                let (t1, ah3) = (ah.target().clone(), ah.clone());
                let twisted = Functor::new(
                    ah.source().clone(),
                    ah.target().clone(),
                    move |o| t1.cod(&p1(o)),
                    move |m| {
                        let s = ah3.source();
                        let t = ah3.target();
                        let back = t.inverse(&p2(&s.dom(m))).expect("picked iso");
                        t.compose(&p2(&s.cod(m)), &t.compose(&ah3.mor(m), &back))
                    },
                )
                .cached();
                NatTrans::new(ah, twisted, move |o| p3(o)).cached()
            })
            .collect();
        let on_mor: Vec<Functor<C, C>> = thetas.iter().map(|t| t.target().clone()).collect();
        let mut coh_comp = HashMap::new();
        for (h, g) in d.composable_pairs() {
            let hg = d.category.compose(&h, &g);
            let z = d.morphisms[h].cod;
            let az = self.cats[z].clone();
            let (th, tg, thg) = (thetas[h].clone(), thetas[g].clone(), thetas[hg].clone());
            let c = self.coh_comp[&(h, g)].clone();
            let ah = self.on_mor[h].clone();
            let tg_target = tg.target().clone();
            let cell = NatTrans::new(on_mor[g].then(&on_mor[h]), on_mor[hg].clone(), move |o| {
                let og = tg_target.ob(o);
                let back = az.compose(&th.at(&og), &ah.mor(&tg.at(o)));
                let back = az.inverse(&back).expect("composite of isos");
                az.compose(&thg.at(o), &az.compose(&c.at(o), &back))
            })
            .cached();
            coh_comp.insert((h, g), cell);
        }
        let coh_id = (0..3).map(|x| thetas[d.identity(x)].vertical(&self.coh_id[x]).cached()).collect();
        TruncCosimp { cats: self.cats.clone(), on_mor, coh_comp, coh_id }
    }
}

/// Typing, invertibility and both coherence axioms over the enumerated
/// objects of the fibers.
pub fn validate_trunc_cosimp<C: Category>(a: &TruncCosimp<C>) -> LawReport {
    let d = Delta3::get();
    let dc = &d.category;
    let mut r = LawReport::default();
    for (h, g) in d.composable_pairs() {
        let x = d.morphisms[g].dom;
        let z = d.morphisms[h].cod;
        let c = a.cell(h, g);
        let az = a.cat(z);
        let hg = dc.compose(&h, &g);
        for o in a.cat(x).objects() {
            let comp = c.at(&o);
            let want_dom = a.on(h).ob(&a.on(g).ob(&o));
            if az.dom(&comp) != want_dom || az.cod(&comp) != a.on(hg).ob(&o) {
                r.push(format!("cell ({}, {}) mistyped at {o:?}", d.name(h), d.name(g)));
            } else if !az.is_iso(&comp) {
                r.push(format!("cell ({}, {}) not invertible at {o:?}", d.name(h), d.name(g)));
            }
        }
    }
    for x in 0..3 {
        let ax = a.cat(x);
        for o in ax.objects() {
            let comp = a.identity_cell(x).at(&o);
            if ax.dom(&comp) != o || ax.cod(&comp) != a.on(d.identity(x)).ob(&o) || !ax.is_iso(&comp) {
                r.push(format!("identity cell of object {} is not an iso at {o:?}", x + 1));
            }
        }
    }
    if !r.is_ok() {
        return r;
    }
    for e in 0..d.count() {
        let (w, x) = (d.morphisms[e].dom, d.morphisms[e].cod);
        let ae = a.on(e);
        let ax = a.cat(x);
        let (idx, idw) = (d.identity(x), d.identity(w));
        for o in a.cat(w).objects() {
            let eo = ae.ob(&o);
            let left = ax.compose(&a.cell(idx, e).at(&o), &a.identity_cell(x).at(&eo));
            let right = ax.compose(&a.cell(e, idw).at(&o), &ae.mor(&a.identity_cell(w).at(&o)));
            if left != ax.id(&eo) || right != ax.id(&eo) {
                r.push(format!("identity axiom fails at {} on {o:?}", d.name(e)));
            }
        }
    }
    for (g, e) in d.composable_pairs() {
        for h in 0..d.count() {
            if d.morphisms[h].dom != d.morphisms[g].cod {
                continue;
            }
            let w = d.morphisms[e].dom;
            let z = d.morphisms[h].cod;
            let az = a.cat(z);
            let ge = dc.compose(&g, &e);
            let hg = dc.compose(&h, &g);
            for o in a.cat(w).objects() {
                let lhs = az.compose(&a.cell(h, ge).at(&o), &a.on(h).mor(&a.cell(g, e).at(&o)));
                let rhs = az.compose(&a.cell(hg, e).at(&o), &a.cell(h, g).at(&a.on(e).ob(&o)));
                if lhs != rhs {
                    r.push(format!(
                        "associativity fails at ({}, {}, {}) on {o:?}",
                        d.name(h),
                        d.name(g),
                        d.name(e)
                    ));
                }
            }
        }
    }
    r
}

/// The cells built from the coherence data that enter the descent
/// equations.
///
/// * `sigma01: A(D¹)A(d⁰) ⇒ A(D⁰)A(d⁰)`
/// * `sigma02: A(D²)A(d⁰) ⇒ A(D⁰)A(d¹)`
/// * `sigma12: A(D²)A(d¹) ⇒ A(D¹)A(d¹)`
/// * `n0: A(s⁰)A(d⁰) ⇒ id`, `n1: A(s⁰)A(d¹) ⇒ id`
pub struct DerivedCells<C: Category> {
    pub sigma01: NatTrans<C, C>,
    pub sigma02: NatTrans<C, C>,
    pub sigma12: NatTrans<C, C>,
    pub n0: NatTrans<C, C>,
    pub n1: NatTrans<C, C>,
}

impl<C: Category> Clone for DerivedCells<C> {
    fn clone(&self) -> Self {
        DerivedCells {
            sigma01: self.sigma01.clone(),
            sigma02: self.sigma02.clone(),
            sigma12: self.sigma12.clone(),
            n0: self.n0.clone(),
            n1: self.n1.clone(),
        }
    }
}

pub fn derived_cells<C: Category>(a: &TruncCosimp<C>) -> DerivedCells<C> {
    use Gen::*;
    let pair = |h: Gen, g: Gen| a.gen_cell(h, g).clone();
    let sigma01 = pair(D0, d0).inverse().vertical(&pair(D1, d0));
    let sigma02 = pair(D0, d1).inverse().vertical(&pair(D2, d0));
    let sigma12 = pair(D1, d1).inverse().vertical(&pair(D2, d1));
    let unit = a.identity_cell(0).inverse();
    let n0 = unit.vertical(&pair(s0, d0));
    let n1 = unit.vertical(&pair(s0, d1));
    DerivedCells {
        sigma01: sigma01.cached(),
        sigma02: sigma02.cached(),
        sigma12: sigma12.cached(),
        n0: n0.cached(),
        n1: n1.cached(),
    }
}
