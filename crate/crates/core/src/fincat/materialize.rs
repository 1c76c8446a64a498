use std::collections::HashMap;
use std::sync::Arc;

use super::{Category, FinCategory, Functor};

/// A category with a finite enumeration turned into tables, together with
/// the cells each index stands for.
pub struct Materialized<C: Category> {
    pub category: FinCategory,
    pub objects: Vec<C::Obj>,
    pub morphisms: Vec<C::Mor>,
    pub source: Arc<C>,
    object_index: HashMap<C::Obj, usize>,
    morphism_index: HashMap<C::Mor, usize>,
}

impl<C: Category> Materialized<C> {
    pub fn object_index(&self, x: &C::Obj) -> Option<usize> {
        self.object_index.get(x).copied()
    }

    pub fn morphism_index(&self, f: &C::Mor) -> Option<usize> {
        self.morphism_index.get(f).copied()
    }

    /// The inclusion of the table category back into `C`.
    pub fn inclusion(&self) -> Functor<FinCategory, C> {
        let (obs, mors) = (self.objects.clone(), self.morphisms.clone());
        Functor::new(
            Arc::new(self.category.clone()),
            self.source.clone(),
            move |x| obs[*x].clone(),
            move |f| mors[*f].clone(),
        )
    }
}

/// Tables for the full subcategory on `c.objects()`. Morphisms are grouped by
/// `(dom, cod)` in enumeration order and listed in hom order within a group.
pub fn materialize<C: Category>(c: &Arc<C>) -> Materialized<C> {
    let objects = c.objects();
    let object_index: HashMap<C::Obj, usize> = objects.iter().cloned().enumerate().map(|(i, x)| (x, i)).collect();
    let mut morphisms = Vec::new();
    let mut ends = Vec::new();
    for (i, x) in objects.iter().enumerate() {
        for (j, y) in objects.iter().enumerate() {
            for f in c.hom(x, y) {
                morphisms.push(f);
                ends.push((i, j));
            }
        }
    }
    let morphism_index: HashMap<C::Mor, usize> =
        morphisms.iter().cloned().enumerate().map(|(i, f)| (f, i)).collect();
    let ids: Vec<usize> = objects.iter().map(|x| morphism_index[&c.id(x)]).collect();
    let category = FinCategory::from_fn(objects.len(), &ends, &ids, |g, f| {
        let h = c.compose(&morphisms[g], &morphisms[f]);
        *morphism_index.get(&h).expect("hom enumeration closed under composition")
    })
    .expect("materialized tables");
    Materialized { category, objects, morphisms, source: c.clone(), object_index, morphism_index }
}
