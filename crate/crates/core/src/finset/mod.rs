//! Finite sets, slices `Set/b`, change of base and the basic indexed category.
//!
//! The set `[n]` is `{0, …, n-1}`. Constructed sets (pullbacks, limits) are
//! encoded by the lexicographic rank of their tuples; quotients are labelled
//! by their least representative. The empty set is an ordinary object.

mod diagrams;
mod indexed;
mod slice;

pub use diagrams::{diagram_indexed_category, lan_along, restrict, DiagramIndexed, SetDiagram, SetDiagrams, SetNat};
pub use indexed::{basic_indexed_category, change_of_base, coherence_id, coherence_iso, postcompose, sigma_adjunction, BasicIndexed};
pub use slice::{slice_category, Slice, SliceMap, SliceObj};

use std::collections::HashMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::fincat::{Category, Cone, Diagram, Limits};

/// A map `[dom] → [cod]` given by its image list.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct FinSetMap {
    pub cod: usize,
    pub map: Vec<usize>,
}

impl FinSetMap {
    pub fn new(cod: usize, map: Vec<usize>) -> Result<Self> {
        if let Some(v) = map.iter().find(|&&v| v >= cod) {
            return Err(Error::Invalid(format!("image {v} outside [{cod}]")));
        }
        Ok(FinSetMap { cod, map })
    }

    pub fn identity(n: usize) -> Self {
        FinSetMap { cod: n, map: (0..n).collect() }
    }

    pub fn dom(&self) -> usize {
        self.map.len()
    }

    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }

    /// `g ∘ self`.
    pub fn then(&self, g: &FinSetMap) -> FinSetMap {
        FinSetMap { cod: g.cod, map: self.map.iter().map(|&x| g.map[x]).collect() }
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = vec![false; self.cod];
        self.map.iter().all(|&v| !std::mem::replace(&mut seen[v], true))
    }

    pub fn is_surjective(&self) -> bool {
        let mut seen = vec![false; self.cod];
        for &v in &self.map {
            seen[v] = true;
        }
        seen.into_iter().all(|b| b)
    }

    pub fn is_bijective(&self) -> bool {
        self.dom() == self.cod && self.is_injective()
    }

    pub fn inverse(&self) -> Option<FinSetMap> {
        if !self.is_bijective() {
            return None;
        }
        let mut inv = vec![0; self.cod];
        for (x, &y) in self.map.iter().enumerate() {
            inv[y] = x;
        }
        Some(FinSetMap { cod: self.dom(), map: inv })
    }

    /// Canonical text form `[i0,...,ik]`.
    pub fn to_text(&self) -> String {
        let parts: Vec<String> = self.map.iter().map(|v| v.to_string()).collect();
        format!("[{}]", parts.join(","))
    }
}

/// All maps `[n] → [m]` in lexicographic order of image lists.
pub fn all_maps(n: usize, m: usize) -> Vec<FinSetMap> {
    odometer(&vec![(0..m).collect::<Vec<_>>(); n])
        .into_iter()
        .map(|map| FinSetMap { cod: m, map })
        .collect()
}

/// Every choice of one entry per list, lexicographically.
pub(crate) fn odometer(choices: &[Vec<usize>]) -> Vec<Vec<usize>> {
    if choices.iter().any(|c| c.is_empty()) {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut idx = vec![0usize; choices.len()];
    loop {
        out.push(idx.iter().zip(choices).map(|(&i, c)| c[i]).collect());
        let mut k = choices.len();
        loop {
            if k == 0 {
                return out;
            }
            k -= 1;
            idx[k] += 1;
            if idx[k] < choices[k].len() {
                break;
            }
            idx[k] = 0;
        }
    }
}

/// The category of finite sets `[n]`. `objects` lists `[0] … [bound]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FinSet {
    pub bound: usize,
}

impl FinSet {
    pub fn new(bound: usize) -> Self {
        FinSet { bound }
    }
}

impl Category for FinSet {
    type Obj = usize;
    type Mor = FinSetMap;

    fn dom(&self, f: &FinSetMap) -> usize {
        f.dom()
    }
    fn cod(&self, f: &FinSetMap) -> usize {
        f.cod
    }
    fn id(&self, x: &usize) -> FinSetMap {
        FinSetMap::identity(*x)
    }
    fn compose(&self, g: &FinSetMap, f: &FinSetMap) -> FinSetMap {
        debug_assert_eq!(f.cod, g.dom());
        f.then(g)
    }
    fn hom(&self, x: &usize, y: &usize) -> Vec<FinSetMap> {
        all_maps(*x, *y)
    }
    fn objects(&self) -> Vec<usize> {
        (0..=self.bound).collect()
    }
    fn inverse(&self, f: &FinSetMap) -> Option<FinSetMap> {
        f.inverse()
    }
    fn is_iso(&self, f: &FinSetMap) -> bool {
        f.is_bijective()
    }
    fn is_isomorphic(&self, x: &usize, y: &usize) -> bool {
        x == y
    }
    fn isos(&self, x: &usize, y: &usize) -> Vec<FinSetMap> {
        if x != y {
            return Vec::new();
        }
        permutations(*x).into_iter().map(|map| FinSetMap { cod: *y, map }).collect()
    }
    fn pick_iso(&self, x: &usize, key: u64) -> FinSetMap {
        FinSetMap { cod: *x, map: random_permutation(*x, key) }
    }
}

/// All permutations of `0..n` in lexicographic order.
pub(crate) fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(n);
    let mut used = vec![false; n];
    fn go(n: usize, cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for i in 0..n {
            if !used[i] {
                used[i] = true;
                cur.push(i);
                go(n, cur, used, out);
                cur.pop();
                used[i] = false;
            }
        }
    }
    go(n, &mut cur, &mut used, &mut out);
    out
}

/// A permutation of `0..n` determined by `key`.
pub(crate) fn random_permutation(n: usize, key: u64) -> Vec<usize> {
    let mut v: Vec<usize> = (0..n).collect();
    let mut k = key;
    for i in (1..n).rev() {
        k = k.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        let j = ((k >> 33) % (i as u64 + 1)) as usize;
        v.swap(i, j);
    }
    v
}

/// A pullback with its projections.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChosenLimit {
    pub apex: usize,
    pub projections: Vec<FinSetMap>,
}

/// The pullback of `f` and `g`: pairs `(x, y)` with `f(x) = g(y)`, ranked
/// lexicographically over `dom f × dom g`.
pub fn pullback(f: &FinSetMap, g: &FinSetMap) -> Result<ChosenLimit> {
    if f.cod != g.cod {
        return Err(Error::Invalid(format!("codomains differ: [{}] and [{}]", f.cod, g.cod)));
    }
    let mut p1 = Vec::new();
    let mut p2 = Vec::new();
    for x in 0..f.dom() {
        for y in 0..g.dom() {
            if f.map[x] == g.map[y] {
                p1.push(x);
                p2.push(y);
            }
        }
    }
    Ok(ChosenLimit {
        apex: p1.len(),
        projections: vec![FinSetMap { cod: f.dom(), map: p1 }, FinSetMap { cod: g.dom(), map: p2 }],
    })
}

/// Matching families of a finite diagram of sets, in lexicographic order.
pub(crate) fn matching_families(sizes: &[usize], edges: &[(usize, usize, &FinSetMap)]) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(sizes.len());
    fn go(sizes: &[usize], edges: &[(usize, usize, &FinSetMap)], cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let k = cur.len();
        if k == sizes.len() {
            out.push(cur.clone());
            return;
        }
        for v in 0..sizes[k] {
            cur.push(v);
            let ok = edges.iter().all(|(i, j, e)| {
                if *i > k || *j > k || (*i != k && *j != k) {
                    true
                } else {
                    e.map[cur[*i]] == cur[*j]
                }
            });
            if ok {
                go(sizes, edges, cur, out);
            }
            cur.pop();
        }
    }
    go(sizes, edges, &mut cur, &mut out);
    out
}

/// Union-find classes of the disjoint union of `sizes` under the edges;
/// returns, for every node and element, the class index. Classes are
/// numbered in order of their least representative.
pub(crate) fn quotient_classes(sizes: &[usize], edges: &[(usize, usize, &FinSetMap)]) -> (usize, Vec<Vec<usize>>) {
    let offsets: Vec<usize> = sizes
        .iter()
        .scan(0, |acc, &s| {
            let o = *acc;
            *acc += s;
            Some(o)
        })
        .collect();
    let total: usize = sizes.iter().sum();
    let mut parent: Vec<usize> = (0..total).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        let mut y = x;
        while p[y] != r {
            let n = p[y];
            p[y] = r;
            y = n;
        }
        r
    }
    for (i, j, e) in edges {
        for u in 0..sizes[*i] {
            let a = find(&mut parent, offsets[*i] + u);
            let b = find(&mut parent, offsets[*j] + e.map[u]);
            // keep the smaller index as root so roots are least representatives
            let (lo, hi) = if a < b { (a, b) } else { (b, a) };
            parent[hi] = lo;
        }
    }
    let mut label = vec![usize::MAX; total];
    let mut count = 0;
    for x in 0..total {
        let r = find(&mut parent, x);
        if label[r] == usize::MAX {
            label[r] = count;
            count += 1;
        }
        label[x] = label[r];
    }
    let classes = (0..sizes.len())
        .map(|i| (0..sizes[i]).map(|u| label[offsets[i] + u]).collect())
        .collect();
    (count, classes)
}

/// The unique map `apex → lim` whose composites with the legs are the cone
/// legs, matching on `keys` (extra per-element data such as slice legs).
pub(crate) fn mediate_by_keys(
    lim_keys: &[Vec<usize>],
    cone_keys: &[Vec<usize>],
) -> Option<Vec<usize>> {
    let mut index: HashMap<&[usize], usize> = HashMap::new();
    for (j, k) in lim_keys.iter().enumerate() {
        if index.insert(k.as_slice(), j).is_some() {
            return None;
        }
    }
    cone_keys.iter().map(|k| index.get(k.as_slice()).copied()).collect()
}

/// The unique map out of a colimit apex commuting with cocone legs.
pub(crate) fn comediate_sets(
    colim_apex: usize,
    colim_legs: &[&FinSetMap],
    cocone_legs: &[&FinSetMap],
) -> Option<Vec<usize>> {
    let mut out: Vec<Option<usize>> = vec![None; colim_apex];
    for (l, k) in colim_legs.iter().zip(cocone_legs) {
        for u in 0..l.dom() {
            let c = l.map[u];
            match out[c] {
                None => out[c] = Some(k.map[u]),
                Some(v) if v != k.map[u] => return None,
                _ => {}
            }
        }
    }
    out.into_iter().collect()
}

fn set_edges(d: &Diagram<usize, FinSetMap>) -> Vec<(usize, usize, &FinSetMap)> {
    d.edges.iter().map(|(i, j, e)| (*i, *j, e)).collect()
}

impl Limits for FinSet {
    fn limit(&self, d: &Diagram<usize, FinSetMap>) -> Option<Cone<usize, FinSetMap>> {
        let fams = matching_families(&d.nodes, &set_edges(d));
        let legs = (0..d.nodes.len())
            .map(|i| FinSetMap { cod: d.nodes[i], map: fams.iter().map(|t| t[i]).collect() })
            .collect();
        Some(Cone { apex: fams.len(), legs })
    }

    fn colimit(&self, d: &Diagram<usize, FinSetMap>) -> Option<Cone<usize, FinSetMap>> {
        let (count, classes) = quotient_classes(&d.nodes, &set_edges(d));
        let legs = classes.into_iter().map(|map| FinSetMap { cod: count, map }).collect();
        Some(Cone { apex: count, legs })
    }

    fn mediate(
        &self,
        _d: &Diagram<usize, FinSetMap>,
        lim: &Cone<usize, FinSetMap>,
        cone: &Cone<usize, FinSetMap>,
    ) -> Option<FinSetMap> {
        let lk: Vec<Vec<usize>> = (0..lim.apex).map(|j| lim.legs.iter().map(|l| l.map[j]).collect()).collect();
        let ck: Vec<Vec<usize>> = (0..cone.apex).map(|a| cone.legs.iter().map(|l| l.map[a]).collect()).collect();
        mediate_by_keys(&lk, &ck).map(|map| FinSetMap { cod: lim.apex, map })
    }

    fn comediate(
        &self,
        _d: &Diagram<usize, FinSetMap>,
        colim: &Cone<usize, FinSetMap>,
        cocone: &Cone<usize, FinSetMap>,
    ) -> Option<FinSetMap> {
        let cl: Vec<&FinSetMap> = colim.legs.iter().collect();
        let kl: Vec<&FinSetMap> = cocone.legs.iter().collect();
        comediate_sets(colim.apex, &cl, &kl).map(|map| FinSetMap { cod: cocone.apex, map })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::{check_category, is_limit_cone};

    fn m(cod: usize, map: &[usize]) -> FinSetMap {
        FinSetMap::new(cod, map.to_vec()).unwrap()
    }

    #[test]
    fn pullback_examples() {
        let p = m(1, &[0, 0]);
        assert_eq!(pullback(&p, &p).unwrap().apex, 4);
        let f = m(2, &[0, 1, 1]);
        let pb = pullback(&f, &FinSetMap::identity(2)).unwrap();
        assert_eq!(pb.apex, 3);
        assert_eq!(pb.projections[0].map, vec![0, 1, 2]);
        assert!(pullback(&f, &m(3, &[0])).is_err());
    }

    #[test]
    fn limits_and_colimits() {
        let c = FinSet::new(3);
        let empty = Diagram { nodes: vec![], edges: vec![] };
        assert_eq!(c.limit(&empty).unwrap().apex, 1);
        assert_eq!(c.colimit(&empty).unwrap().apex, 0);
        let disc = Diagram { nodes: vec![2, 3], edges: vec![] };
        assert_eq!(c.limit(&disc).unwrap().apex, 6);
        let coeq = Diagram { nodes: vec![1, 2], edges: vec![(0, 1, m(2, &[0])), (0, 1, m(2, &[1]))] };
        assert_eq!(c.colimit(&coeq).unwrap().apex, 1);
    }

    #[test]
    fn chosen_limits_are_universal_in_bounded_world() {
        let c = FinSet::new(3);
        let d = Diagram { nodes: vec![2, 2, 1], edges: vec![(0, 2, m(1, &[0, 0])), (1, 2, m(1, &[0, 0]))] };
        let small = Diagram { nodes: vec![2, 1], edges: vec![(0, 1, m(1, &[0, 0]))] };
        assert!(is_limit_cone(&c, &small, &c.limit(&small).unwrap(), false));
        assert!(is_limit_cone(&c, &small, &c.colimit(&small).unwrap(), true));
        assert_eq!(c.limit(&d).unwrap().apex, 4);
    }

    #[test]
    fn category_laws_small_bound() {
        assert!(check_category(&FinSet::new(2)).is_ok());
    }

    #[test]
    fn empty_set_maps_are_unique() {
        for n in 0..4 {
            assert_eq!(all_maps(0, n).len(), 1);
        }
        assert_eq!(all_maps(2, 0).len(), 0);
    }
}
