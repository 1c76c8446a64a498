use std::sync::Arc;

use serde::Serialize;

use super::{
    comediate_sets, matching_families, mediate_by_keys, odometer, permutations, quotient_classes,
    random_permutation, FinSetMap,
};
use crate::fincat::{Category, Cone, Diagram, FinCategory, Limits};

/// An object `w → b` of `Set/b`, given by its leg. The total set is `[leg.len()]`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct SliceObj {
    pub leg: Vec<usize>,
}

impl SliceObj {
    pub fn new(leg: Vec<usize>) -> Self {
        SliceObj { leg }
    }

    pub fn total(&self) -> usize {
        self.leg.len()
    }

    /// Sizes of the fibers over `0..base`.
    pub fn fiber_sizes(&self, base: usize) -> Vec<usize> {
        let mut out = vec![0; base];
        for &b in &self.leg {
            out[b] += 1;
        }
        out
    }
}

/// A map of totals commuting with the legs.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct SliceMap {
    pub src: SliceObj,
    pub dst: SliceObj,
    pub map: Vec<usize>,
}

impl SliceMap {
    pub fn underlying(&self) -> FinSetMap {
        FinSetMap { cod: self.dst.total(), map: self.map.clone() }
    }
}

/// The slice `Set/[base]`.
///
/// Every object and morphism of the slice is accepted by the operations. The
/// enumeration `objects` lists one object per isomorphism class with total
/// size at most `bound`: the legs that are non-decreasing.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Slice {
    pub base: usize,
    pub bound: usize,
}

impl Slice {
    pub fn new(base: usize, bound: usize) -> Self {
        Slice { base, bound }
    }

    /// Whether `x` is an object over this base.
    pub fn contains(&self, x: &SliceObj) -> bool {
        x.leg.iter().all(|&b| b < self.base)
    }

    /// The sorted representative of the isomorphism class of `x`.
    pub fn canonical(x: &SliceObj) -> SliceObj {
        let mut leg = x.leg.clone();
        leg.sort();
        SliceObj { leg }
    }

    fn fiber_lists(&self, x: &SliceObj) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.base];
        for (u, &b) in x.leg.iter().enumerate() {
            out[b].push(u);
        }
        out
    }
}

impl Category for Slice {
    type Obj = SliceObj;
    type Mor = SliceMap;

    fn dom(&self, f: &SliceMap) -> SliceObj {
        f.src.clone()
    }
    fn cod(&self, f: &SliceMap) -> SliceObj {
        f.dst.clone()
    }
    fn id(&self, x: &SliceObj) -> SliceMap {
        SliceMap { src: x.clone(), dst: x.clone(), map: (0..x.total()).collect() }
    }
    fn compose(&self, g: &SliceMap, f: &SliceMap) -> SliceMap {
        debug_assert_eq!(f.dst, g.src);
        SliceMap { src: f.src.clone(), dst: g.dst.clone(), map: f.map.iter().map(|&u| g.map[u]).collect() }
    }
    fn hom(&self, x: &SliceObj, y: &SliceObj) -> Vec<SliceMap> {
        let fibers = self.fiber_lists(y);
        let choices: Vec<Vec<usize>> = x.leg.iter().map(|&b| fibers[b].clone()).collect();
        odometer(&choices)
            .into_iter()
            .map(|map| SliceMap { src: x.clone(), dst: y.clone(), map })
            .collect()
    }
    fn objects(&self) -> Vec<SliceObj> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fn go(base: usize, bound: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<SliceObj>) {
            out.push(SliceObj { leg: cur.clone() });
            if cur.len() == bound {
                return;
            }
            for b in start..base {
                cur.push(b);
                go(base, bound, b, cur, out);
                cur.pop();
            }
        }
        go(self.base, self.bound, 0, &mut cur, &mut out);
        out.sort_by(|a, b| (a.total(), &a.leg).cmp(&(b.total(), &b.leg)));
        out
    }
    fn inverse(&self, f: &SliceMap) -> Option<SliceMap> {
        let inv = f.underlying().inverse()?;
        Some(SliceMap { src: f.dst.clone(), dst: f.src.clone(), map: inv.map })
    }
    fn is_iso(&self, f: &SliceMap) -> bool {
        f.underlying().is_bijective()
    }
    fn is_isomorphic(&self, x: &SliceObj, y: &SliceObj) -> bool {
        x.fiber_sizes(self.base) == y.fiber_sizes(self.base)
    }
    fn isos(&self, x: &SliceObj, y: &SliceObj) -> Vec<SliceMap> {
        if !self.is_isomorphic(x, y) {
            return Vec::new();
        }
        let (fx, fy) = (self.fiber_lists(x), self.fiber_lists(y));
        let mut maps: Vec<Vec<usize>> = vec![vec![0; x.total()]];
        for b in 0..self.base {
            let perms = permutations(fx[b].len());
            let mut next = Vec::with_capacity(maps.len() * perms.len());
            for m in &maps {
                for p in &perms {
                    let mut m = m.clone();
                    for (k, &u) in fx[b].iter().enumerate() {
                        m[u] = fy[b][p[k]];
                    }
                    next.push(m);
                }
            }
            maps = next;
        }
        maps.sort();
        maps.into_iter().map(|map| SliceMap { src: x.clone(), dst: y.clone(), map }).collect()
    }
    fn pick_iso(&self, x: &SliceObj, key: u64) -> SliceMap {
        let fx = self.fiber_lists(x);
        let mut map: Vec<usize> = (0..x.total()).collect();
        for (b, fib) in fx.iter().enumerate() {
            let p = random_permutation(fib.len(), key ^ (b as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15));
            for (k, &u) in fib.iter().enumerate() {
                map[u] = fib[p[k]];
            }
        }
        SliceMap { src: x.clone(), dst: x.clone(), map }
    }
}

impl Limits for Slice {
    /// The wide pullback over the base: matching families of the totals
    /// together with the base point, in lexicographic order.
    fn limit(&self, d: &Diagram<SliceObj, SliceMap>) -> Option<Cone<SliceObj, SliceMap>> {
        let k = d.nodes.len();
        let mut sizes: Vec<usize> = d.nodes.iter().map(|x| x.total()).collect();
        sizes.push(self.base);
        let legs_to_base: Vec<FinSetMap> =
            d.nodes.iter().map(|x| FinSetMap { cod: self.base, map: x.leg.clone() }).collect();
        let unders: Vec<FinSetMap> = d.edges.iter().map(|(_, _, e)| e.underlying()).collect();
        let mut edges: Vec<(usize, usize, &FinSetMap)> =
            d.edges.iter().zip(&unders).map(|((i, j, _), u)| (*i, *j, u)).collect();
        edges.extend(legs_to_base.iter().enumerate().map(|(i, l)| (i, k, l)));
        let fams = matching_families(&sizes, &edges);
        let apex = SliceObj { leg: fams.iter().map(|t| t[k]).collect() };
        let legs = (0..k)
            .map(|i| SliceMap { src: apex.clone(), dst: d.nodes[i].clone(), map: fams.iter().map(|t| t[i]).collect() })
            .collect();
        Some(Cone { apex, legs })
    }

    fn colimit(&self, d: &Diagram<SliceObj, SliceMap>) -> Option<Cone<SliceObj, SliceMap>> {
        let sizes: Vec<usize> = d.nodes.iter().map(|x| x.total()).collect();
        let unders: Vec<FinSetMap> = d.edges.iter().map(|(_, _, e)| e.underlying()).collect();
        let edges: Vec<(usize, usize, &FinSetMap)> =
            d.edges.iter().zip(&unders).map(|((i, j, _), u)| (*i, *j, u)).collect();
        let (count, classes) = quotient_classes(&sizes, &edges);
        let mut leg = vec![0; count];
        for (i, cl) in classes.iter().enumerate() {
            for (u, &c) in cl.iter().enumerate() {
                leg[c] = d.nodes[i].leg[u];
            }
        }
        let apex = SliceObj { leg };
        let legs = classes
            .into_iter()
            .enumerate()
            .map(|(i, map)| SliceMap { src: d.nodes[i].clone(), dst: apex.clone(), map })
            .collect();
        Some(Cone { apex, legs })
    }

    fn mediate(
        &self,
        _d: &Diagram<SliceObj, SliceMap>,
        lim: &Cone<SliceObj, SliceMap>,
        cone: &Cone<SliceObj, SliceMap>,
    ) -> Option<SliceMap> {
        let key = |c: &Cone<SliceObj, SliceMap>, a: usize| -> Vec<usize> {
            std::iter::once(c.apex.leg[a]).chain(c.legs.iter().map(|l| l.map[a])).collect()
        };
        let lk: Vec<Vec<usize>> = (0..lim.apex.total()).map(|j| key(lim, j)).collect();
        let ck: Vec<Vec<usize>> = (0..cone.apex.total()).map(|a| key(cone, a)).collect();
        let map = mediate_by_keys(&lk, &ck)?;
        Some(SliceMap { src: cone.apex.clone(), dst: lim.apex.clone(), map })
    }

    fn comediate(
        &self,
        _d: &Diagram<SliceObj, SliceMap>,
        colim: &Cone<SliceObj, SliceMap>,
        cocone: &Cone<SliceObj, SliceMap>,
    ) -> Option<SliceMap> {
        let cl: Vec<FinSetMap> = colim.legs.iter().map(|l| l.underlying()).collect();
        let kl: Vec<FinSetMap> = cocone.legs.iter().map(|l| l.underlying()).collect();
        let map = comediate_sets(colim.apex.total(), &cl.iter().collect::<Vec<_>>(), &kl.iter().collect::<Vec<_>>())?;
        if map.iter().enumerate().any(|(c, &v)| cocone.apex.leg[v] != colim.apex.leg[c]) {
            return None;
        }
        Some(SliceMap { src: colim.apex.clone(), dst: cocone.apex.clone(), map })
    }
}

/// The bounded slice `Set/[base]` as a table category, with the objects and
/// morphisms each index stands for.
pub fn slice_category(base: usize, bound: usize) -> (FinCategory, Vec<SliceObj>, Vec<SliceMap>) {
    let s = Arc::new(Slice::new(base, bound));
    let m = crate::fincat::materialize(&s);
    (m.category, m.objects, m.morphisms)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::{check_category, is_limit_cone, validate_category};

    #[test]
    fn enumeration_counts() {
        assert_eq!(Slice::new(1, 2).objects().len(), 3);
        assert_eq!(Slice::new(2, 1).objects().len(), 3);
        let (c, obs, _) = slice_category(2, 1);
        assert_eq!(obs.len(), 3);
        assert!(validate_category(&c).is_ok());
    }

    #[test]
    fn hom_is_fiber_preserving() {
        let s = Slice::new(2, 3);
        let x = SliceObj::new(vec![0, 1, 0]);
        let y = SliceObj::new(vec![1, 0, 0]);
        // two choices for each of the two elements over 0, one for the element over 1
        assert_eq!(s.hom(&x, &y).len(), 4);
        assert_eq!(s.isos(&x, &y).len(), 2);
        assert!(s.isos(&x, &y).iter().all(|f| s.is_iso(f)));
    }

    #[test]
    fn laws_and_limits() {
        let s = Slice::new(2, 2);
        assert!(check_category(&s).is_ok());
        let a = SliceObj::new(vec![0, 1]);
        let b = SliceObj::new(vec![0, 0]);
        let d = Diagram { nodes: vec![a.clone(), b.clone()], edges: vec![] };
        let lim = s.limit(&d).unwrap();
        assert_eq!(lim.apex.leg, vec![0, 0]);
        let small = Slice::new(2, 3);
        assert!(is_limit_cone(&small, &d, &lim, false));
        let colim = small.colimit(&d).unwrap();
        assert!(is_limit_cone(&small, &d, &colim, true));
        let empty = Diagram { nodes: vec![], edges: vec![] };
        assert_eq!(s.limit(&empty).unwrap().apex.leg, vec![0, 1]);
        assert_eq!(s.colimit(&empty).unwrap().apex.total(), 0);
    }
}
