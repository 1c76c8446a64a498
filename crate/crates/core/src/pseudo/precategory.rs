use std::collections::HashMap;
use std::sync::Arc;

use super::cosimp::TruncCosimp;
use super::indexed::IndexedCategory;
use crate::delta3::{Delta3, Gen};
use crate::error::{Error, Result};
use crate::fincat::catalog::Monoid;
use crate::fincat::{Category, FinCategory, LawReport};
use crate::finset::{FinSet, FinSetMap};

/// A functor `a: Δ₃^op → B`: three objects and, for every generator
/// `g: x → y` of `Δ₃`, a morphism `a(g): a(y) → a(x)`.
#[derive(Clone, Debug)]
pub struct Precategory<B: Category> {
    pub base: Arc<B>,
    pub objects: [B::Obj; 3],
    pub gens: HashMap<Gen, B::Mor>,
}

impl<B: Category> Precategory<B> {
    /// The image of any morphism of `Δ₃`, composed along its normal form.
    pub fn on(&self, f: usize) -> B::Mor {
        let m = &Delta3::get().morphisms[f];
        let mut acc = self.base.id(&self.objects[m.cod]);
        for g in &m.word {
            acc = self.base.compose(&self.gens[g], &acc);
        }
        acc
    }

    /// The precategory constantly equal to `x`.
    pub fn constant(base: Arc<B>, x: B::Obj) -> Self {
        let id = base.id(&x);
        let gens = Gen::ALL.iter().map(|&g| (g, id.clone())).collect();
        Precategory { base, objects: [x.clone(), x.clone(), x], gens }
    }
}

/// Typing of the generator images and every relation of `Δ₃`, dualized.
pub fn validate_precategory<B: Category>(a: &Precategory<B>) -> LawReport {
    let d = Delta3::get();
    let b = &a.base;
    let mut r = LawReport::default();
    for g in Gen::ALL {
        let Some(m) = a.gens.get(&g) else {
            r.push(format!("no image for {}", g.name()));
            continue;
        };
        let (x, y) = g.typing();
        if b.dom(m) != a.objects[y] || b.cod(m) != a.objects[x] {
            r.push(format!("image of {} has the wrong type", g.name()));
        }
    }
    if !r.is_ok() {
        return r;
    }
    for (h, g) in d.composable_pairs() {
        let hg = d.category.compose(&h, &g);
        if a.on(hg) != b.compose(&a.on(g), &a.on(h)) {
            r.push(format!("a({}∘{}) ≠ a({})∘a({})", d.name(h), d.name(g), d.name(g), d.name(h)));
        }
    }
    r
}

/// `Σm` in finite sets: the point, the underlying set of `m`, and `m×m`
/// (pairs ranked lexicographically). `D⁰` and `D²` are the projections
/// onto the first and second factor, `D¹` is the multiplication and `s⁰`
/// picks the unit.
pub fn sigma_precategory(m: &Monoid) -> Precategory<FinSet> {
    let n = m.size();
    let mut gens = HashMap::new();
    gens.insert(Gen::d0, FinSetMap { cod: 1, map: vec![0; n] });
    gens.insert(Gen::d1, FinSetMap { cod: 1, map: vec![0; n] });
    gens.insert(Gen::s0, FinSetMap { cod: n, map: vec![0] });
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|x| (0..n).map(move |y| (x, y))).collect();
    gens.insert(Gen::D0, FinSetMap { cod: n, map: pairs.iter().map(|p| p.0).collect() });
    gens.insert(Gen::D1, FinSetMap { cod: n, map: pairs.iter().map(|&(x, y)| m.mul(x, y)).collect() });
    gens.insert(Gen::D2, FinSetMap { cod: n, map: pairs.iter().map(|p| p.1).collect() });
    Precategory { base: Arc::new(FinSet::new(n * n)), objects: [1, n, n * n], gens }
}

/// The nerve of a table category, truncated: objects, morphisms
/// (`d¹` the domain, `d⁰` the codomain) and composable pairs `(f, g)` with
/// `D² = f`, `D⁰ = g`, `D¹ = g∘f`.
pub fn nerve(c: &FinCategory) -> Precategory<FinSet> {
    let mors = c.morphisms();
    let (n, m) = (c.object_count(), mors.len());
    let mut pairs = Vec::new();
    for f in 0..m {
        for g in 0..m {
            if mors[f].1 == mors[g].0 {
                pairs.push((f, g));
            }
        }
    }
    let k = pairs.len();
    let mut gens = HashMap::new();
    gens.insert(Gen::d1, FinSetMap { cod: n, map: mors.iter().map(|p| p.0).collect() });
    gens.insert(Gen::d0, FinSetMap { cod: n, map: mors.iter().map(|p| p.1).collect() });
    gens.insert(Gen::s0, FinSetMap { cod: m, map: (0..n).map(|x| c.identity_of(x)).collect() });
    gens.insert(Gen::D2, FinSetMap { cod: m, map: pairs.iter().map(|p| p.0).collect() });
    gens.insert(Gen::D0, FinSetMap { cod: m, map: pairs.iter().map(|p| p.1).collect() });
    gens.insert(
        Gen::D1,
        FinSetMap { cod: m, map: pairs.iter().map(|&(f, g)| c.composite(g, f).unwrap()).collect() },
    );
    Precategory { base: Arc::new(FinSet::new(k.max(m).max(n))), objects: [n, m, k], gens }
}

/// `F∘op(a): Δ₃ → Cat`, with `B(h) = F(a(h))` and coherence
/// `𝔟_{hg} = 𝔣_{a(h), a(g)}`, `𝔟_x = 𝔣_{a(x)}`.
pub fn compose_indexed_with_precategory<I: IndexedCategory>(
    f: &I,
    a: &Precategory<I::Base>,
) -> Result<TruncCosimp<I::Fiber>> {
    let rep = validate_precategory(a);
    if !rep.is_ok() {
        return Err(Error::Invalid(rep.violations.join("; ")));
    }
    let d = Delta3::get();
    let images: Vec<<I::Base as Category>::Mor> = (0..d.count()).map(|h| a.on(h)).collect();
    let cats = [f.fiber(&a.objects[0]), f.fiber(&a.objects[1]), f.fiber(&a.objects[2])];
    let on_mor = images.iter().map(|m| f.reindex(m).cached()).collect();
    let mut coh = HashMap::new();
    for (h, g) in d.composable_pairs() {
        coh.insert((h, g), f.coh_comp(&images[h], &images[g]).cached());
    }
    let coh_id = (0..3).map(|x| f.coh_id(&a.objects[x]).cached()).collect();
    TruncCosimp::new(cats, on_mor, coh, coh_id)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::catalog;
    use crate::finset::basic_indexed_category;
    use crate::pseudo::{derived_cells, validate_trunc_cosimp, FamIndexed};

    #[test]
    fn sigma_tables() {
        let a = sigma_precategory(&Monoid::m2());
        assert!(validate_precategory(&a).is_ok());
        assert_eq!(a.gens[&Gen::D1].map, vec![0, 1, 1, 1]);
        let z2 = sigma_precategory(&Monoid::cyclic(2));
        assert_eq!(z2.gens[&Gen::D1].map, vec![0, 1, 1, 0]);
        assert_eq!(sigma_precategory(&Monoid::trivial()).objects, [1, 1, 1]);
    }

    #[test]
    fn nerves_are_precategories() {
        for c in catalog::small_catalog() {
            assert!(validate_precategory(&nerve(&c)).is_ok());
        }
    }

    #[test]
    fn composite_with_slices_is_valid() {
        let a = sigma_precategory(&Monoid::m2());
        let t = compose_indexed_with_precategory(&basic_indexed_category(2), &a).unwrap();
        assert!(validate_trunc_cosimp(&t).is_ok());
    }

    #[test]
    fn strict_composite_has_identity_derived_cells() {
        let fam = FamIndexed { x: Arc::new(catalog::arrow()), base_bound: 4 };
        let t = compose_indexed_with_precategory(&fam, &nerve(&catalog::arrow())).unwrap();
        assert!(validate_trunc_cosimp(&t).is_ok());
        let cells = derived_cells(&t);
        let a1 = t.cat(0);
        for w in a1.objects() {
            let n0 = cells.n0.at(&w);
            assert_eq!(n0, a1.id(&w));
        }
        let tw = t.twist(3);
        assert!(validate_trunc_cosimp(&tw).is_ok());
    }
}
