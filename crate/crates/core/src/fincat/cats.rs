use std::collections::HashMap;
use std::sync::Arc;

use super::{all_functors, Category, Cone, Diagram, FinCategory, FinFunctor, Limits};
use crate::finset::{matching_families, FinSetMap};

/// Finite categories and functors between them. `objects` lists the
/// catalog; limits are built constructively and need not be in it.
#[derive(Clone, Debug)]
pub struct Cats {
    pub catalog: Vec<Arc<FinCategory>>,
}

impl Cats {
    pub fn new(catalog: Vec<FinCategory>) -> Self {
        Cats { catalog: catalog.into_iter().map(Arc::new).collect() }
    }
}

impl Category for Cats {
    type Obj = Arc<FinCategory>;
    type Mor = FinFunctor;

    fn dom(&self, f: &FinFunctor) -> Arc<FinCategory> {
        f.source.clone()
    }
    fn cod(&self, f: &FinFunctor) -> Arc<FinCategory> {
        f.target.clone()
    }
    fn id(&self, x: &Arc<FinCategory>) -> FinFunctor {
        FinFunctor::identity(x.clone())
    }
    fn compose(&self, g: &FinFunctor, f: &FinFunctor) -> FinFunctor {
        f.then(g)
    }
    fn hom(&self, x: &Arc<FinCategory>, y: &Arc<FinCategory>) -> Vec<FinFunctor> {
        all_functors(x, y, None).iter().map(FinFunctor::materialize).collect()
    }
    fn objects(&self) -> Vec<Arc<FinCategory>> {
        self.catalog.clone()
    }
}

fn table_maps(d: &Diagram<Arc<FinCategory>, FinFunctor>) -> (Vec<FinSetMap>, Vec<FinSetMap>) {
    let obs = d
        .edges
        .iter()
        .map(|(_, j, f)| FinSetMap { cod: d.nodes[*j].object_count(), map: f.object_map.clone() })
        .collect();
    let mors = d
        .edges
        .iter()
        .map(|(_, j, f)| FinSetMap { cod: d.nodes[*j].morphism_count(), map: f.morphism_map.clone() })
        .collect();
    (obs, mors)
}

impl Limits for Cats {
    /// Matching families of objects and of morphisms, composed
    /// componentwise, both ranked lexicographically.
    fn limit(&self, d: &Diagram<Arc<FinCategory>, FinFunctor>) -> Option<Cone<Arc<FinCategory>, FinFunctor>> {
        let (om, mm) = table_maps(d);
        let oe: Vec<(usize, usize, &FinSetMap)> = d.edges.iter().zip(&om).map(|((i, j, _), m)| (*i, *j, m)).collect();
        let me: Vec<(usize, usize, &FinSetMap)> = d.edges.iter().zip(&mm).map(|((i, j, _), m)| (*i, *j, m)).collect();
        let osizes: Vec<usize> = d.nodes.iter().map(|c| c.object_count()).collect();
        let msizes: Vec<usize> = d.nodes.iter().map(|c| c.morphism_count()).collect();
        let ofam = matching_families(&osizes, &oe);
        let mfam = matching_families(&msizes, &me);
        let oidx: HashMap<&[usize], usize> = ofam.iter().enumerate().map(|(k, v)| (v.as_slice(), k)).collect();
        let midx: HashMap<&[usize], usize> = mfam.iter().enumerate().map(|(k, v)| (v.as_slice(), k)).collect();
        let n = d.nodes.len();
        let typing: Vec<(usize, usize)> = mfam
            .iter()
            .map(|f| {
                let dom: Vec<usize> = (0..n).map(|i| d.nodes[i].dom(&f[i])).collect();
                let cod: Vec<usize> = (0..n).map(|i| d.nodes[i].cod(&f[i])).collect();
                (oidx[dom.as_slice()], oidx[cod.as_slice()])
            })
            .collect();
        let ids: Vec<usize> = ofam
            .iter()
            .map(|x| {
                let id: Vec<usize> = (0..n).map(|i| d.nodes[i].identity_of(x[i])).collect();
                midx[id.as_slice()]
            })
            .collect();
        let apex = FinCategory::from_fn(ofam.len(), &typing, &ids, |g, f| {
            let gf: Vec<usize> = (0..n).map(|i| d.nodes[i].compose(&mfam[g][i], &mfam[f][i])).collect();
            midx[gf.as_slice()]
        })
        .ok()?;
        let apex = Arc::new(apex);
        let legs = (0..n)
            .map(|i| FinFunctor {
                source: apex.clone(),
                target: d.nodes[i].clone(),
                object_map: ofam.iter().map(|x| x[i]).collect(),
                morphism_map: mfam.iter().map(|f| f[i]).collect(),
            })
            .collect();
        Some(Cone { apex, legs })
    }

    fn mediate(
        &self,
        _d: &Diagram<Arc<FinCategory>, FinFunctor>,
        lim: &Cone<Arc<FinCategory>, FinFunctor>,
        cone: &Cone<Arc<FinCategory>, FinFunctor>,
    ) -> Option<FinFunctor> {
        let key = |legs: &[FinFunctor], obj: bool, k: usize| -> Vec<usize> {
            legs.iter().map(|l| if obj { l.object_map[k] } else { l.morphism_map[k] }).collect()
        };
        let a = &lim.apex;
        let oidx: HashMap<Vec<usize>, usize> = (0..a.object_count()).map(|k| (key(&lim.legs, true, k), k)).collect();
        let midx: HashMap<Vec<usize>, usize> = (0..a.morphism_count()).map(|k| (key(&lim.legs, false, k), k)).collect();
        let src = &cone.apex;
        let object_map = (0..src.object_count())
            .map(|k| oidx.get(&key(&cone.legs, true, k)).copied())
            .collect::<Option<Vec<_>>>()?;
        let morphism_map = (0..src.morphism_count())
            .map(|k| midx.get(&key(&cone.legs, false, k)).copied())
            .collect::<Option<Vec<_>>>()?;
        Some(FinFunctor { source: src.clone(), target: a.clone(), object_map, morphism_map })
    }
}

/// The kernel pair of `p` in finite categories, with its two projections.
pub fn kernel_pair(p: &FinFunctor) -> (Arc<FinCategory>, FinFunctor, FinFunctor) {
    let d = Diagram {
        nodes: vec![p.source.clone(), p.source.clone(), p.target.clone()],
        edges: vec![(0, 2, p.clone()), (1, 2, p.clone())],
    };
    let cone = Cats { catalog: Vec::new() }.limit(&d).expect("limits of finite categories exist");
    let mut legs = cone.legs.into_iter();
    (cone.apex, legs.next().unwrap(), legs.next().unwrap())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::{catalog, check_functor, validate_category};

    #[test]
    fn pullback_of_categories() {
        let two = Arc::new(FinCategory::discrete(2));
        let one = Arc::new(FinCategory::terminal());
        let h = FinFunctor::new(two.clone(), one.clone(), vec![0, 0], vec![0, 0]).unwrap();
        let (kp, p0, p1) = kernel_pair(&h);
        assert_eq!(kp.object_count(), 4);
        assert_eq!(kp.morphism_count(), 4);
        assert!(validate_category(&kp).is_ok());
        assert!(check_functor(&p0.to_functor()).is_ok() && check_functor(&p1.to_functor()).is_ok());
        let arrow = Arc::new(catalog::arrow());
        let to_one = FinFunctor::new(arrow.clone(), one.clone(), vec![0, 0], vec![0; 3]).unwrap();
        let (sq, _, _) = kernel_pair(&to_one);
        // the arrow squared: 4 objects, 9 morphisms
        assert_eq!((sq.object_count(), sq.morphism_count()), (4, 9));
        assert!(validate_category(&sq).is_ok());
    }

    #[test]
    fn mediating_functor() {
        let arrow = Arc::new(catalog::arrow());
        let one = Arc::new(FinCategory::terminal());
        let to_one = FinFunctor::new(arrow.clone(), one.clone(), vec![0, 0], vec![0; 3]).unwrap();
        let d = Diagram {
            nodes: vec![arrow.clone(), arrow.clone(), one.clone()],
            edges: vec![(0, 2, to_one.clone()), (1, 2, to_one.clone())],
        };
        let cats = Cats::new(vec![]);
        let lim = cats.limit(&d).unwrap();
        let id = FinFunctor::identity(arrow.clone());
        let diag = cats.mediate(&d, &lim, &Cone { apex: arrow.clone(), legs: vec![id.clone(), id, to_one] }).unwrap();
        assert!(check_functor(&diag.to_functor()).is_ok());
        assert_eq!(cats.compose(&lim.legs[0], &diag), FinFunctor::identity(arrow));
    }
}
