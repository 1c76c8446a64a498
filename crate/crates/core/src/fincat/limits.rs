use super::Category;

/// A finite diagram: nodes and edges `(i, j, e)` with `e: nodes[i] → nodes[j]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Diagram<O, M> {
    pub nodes: Vec<O>,
    pub edges: Vec<(usize, usize, M)>,
}

/// A cone (legs `apex → node`) or a cocone (legs `node → apex`).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Cone<O, M> {
    pub apex: O,
    pub legs: Vec<M>,
}

/// Chosen limits and colimits of finite diagrams.
///
/// The default methods search exhaustively over the enumerated objects, which
/// is exact for finite categories. Set-backed categories override them with
/// constructions.
pub trait Limits: Category + Sized {
    fn limit(&self, d: &Diagram<Self::Obj, Self::Mor>) -> Option<Cone<Self::Obj, Self::Mor>> {
        search_limit(self, d)
    }
    fn colimit(&self, d: &Diagram<Self::Obj, Self::Mor>) -> Option<Cone<Self::Obj, Self::Mor>> {
        search_colimit(self, d)
    }
    /// The unique morphism `cone.apex → lim.apex` commuting with the legs,
    /// where `lim` is a limit cone (not necessarily the chosen one).
    fn mediate(
        &self,
        d: &Diagram<Self::Obj, Self::Mor>,
        lim: &Cone<Self::Obj, Self::Mor>,
        cone: &Cone<Self::Obj, Self::Mor>,
    ) -> Option<Self::Mor> {
        search_mediate(self, d, lim, cone)
    }
    /// The unique morphism `colim.apex → cocone.apex` commuting with the legs.
    fn comediate(
        &self,
        d: &Diagram<Self::Obj, Self::Mor>,
        colim: &Cone<Self::Obj, Self::Mor>,
        cocone: &Cone<Self::Obj, Self::Mor>,
    ) -> Option<Self::Mor> {
        search_comediate(self, d, colim, cocone)
    }
}

// `dual = true` reads every hom and composite in the opposite category, so
// cones become cocones.
fn hom_d<C: Category>(c: &C, x: &C::Obj, y: &C::Obj, dual: bool) -> Vec<C::Mor> {
    if dual {
        c.hom(y, x)
    } else {
        c.hom(x, y)
    }
}

fn comp_d<C: Category>(c: &C, g: &C::Mor, f: &C::Mor, dual: bool) -> C::Mor {
    if dual {
        c.compose(f, g)
    } else {
        c.compose(g, f)
    }
}

fn cones_at<C: Category>(c: &C, d: &Diagram<C::Obj, C::Mor>, apex: &C::Obj, dual: bool) -> Vec<Vec<C::Mor>> {
    let cands: Vec<Vec<C::Mor>> = d.nodes.iter().map(|n| hom_d(c, apex, n, dual)).collect();
    let mut out = Vec::new();
    let mut legs: Vec<C::Mor> = Vec::with_capacity(d.nodes.len());
    fn go<C: Category>(
        c: &C,
        d: &Diagram<C::Obj, C::Mor>,
        cands: &[Vec<C::Mor>],
        legs: &mut Vec<C::Mor>,
        out: &mut Vec<Vec<C::Mor>>,
        dual: bool,
    ) {
        let k = legs.len();
        if k == cands.len() {
            out.push(legs.clone());
            return;
        }
        for f in &cands[k] {
            legs.push(f.clone());
            if cone_commutes_partial(c, d, legs, dual) {
                go(c, d, cands, legs, out, dual);
            }
            legs.pop();
        }
    }
    go(c, d, &cands, &mut legs, &mut out, dual);
    out
}

fn cone_commutes_partial<C: Category>(c: &C, d: &Diagram<C::Obj, C::Mor>, legs: &[C::Mor], dual: bool) -> bool {
    let k = legs.len() - 1;
    d.edges.iter().all(|(i, j, e)| {
        if *i > k || *j > k || (*i != k && *j != k) {
            return true;
        }
        if dual {
            // cocone: l_j ∘ e = l_i
            c.compose(&legs[*j], e) == legs[*i]
        } else {
            c.compose(e, &legs[*i]) == legs[*j]
        }
    })
}

fn commutes_all<C: Category>(c: &C, d: &Diagram<C::Obj, C::Mor>, legs: &[C::Mor], dual: bool) -> bool {
    d.edges.iter().all(|(i, j, e)| {
        if dual {
            c.compose(&legs[*j], e) == legs[*i]
        } else {
            c.compose(e, &legs[*i]) == legs[*j]
        }
    })
}

fn mediators<C: Category>(
    c: &C,
    lim: &Cone<C::Obj, C::Mor>,
    cone: &Cone<C::Obj, C::Mor>,
    dual: bool,
    stop_at: usize,
) -> Vec<C::Mor> {
    let mut out = Vec::new();
    for m in hom_d(c, &cone.apex, &lim.apex, dual) {
        let ok = lim
            .legs
            .iter()
            .zip(&cone.legs)
            .all(|(l, k)| comp_d(c, l, &m, dual) == *k);
        if ok {
            out.push(m);
            if out.len() >= stop_at {
                break;
            }
        }
    }
    out
}

fn all_cones<C: Category>(c: &C, d: &Diagram<C::Obj, C::Mor>, dual: bool) -> Vec<Cone<C::Obj, C::Mor>> {
    let mut all = Vec::new();
    for x in c.objects() {
        for legs in cones_at(c, d, &x, dual) {
            all.push(Cone { apex: x.clone(), legs });
        }
    }
    all
}

fn search<C: Category>(c: &C, d: &Diagram<C::Obj, C::Mor>, dual: bool) -> Option<Cone<C::Obj, C::Mor>> {
    let all = all_cones(c, d, dual);
    all.iter()
        .find(|l| all.iter().all(|k| mediators(c, l, k, dual, 2).len() == 1))
        .cloned()
}

/// Exhaustive limit search: the first cone, in enumeration order, through
/// which every cone factors uniquely.
pub fn search_limit<C: Category>(c: &C, d: &Diagram<C::Obj, C::Mor>) -> Option<Cone<C::Obj, C::Mor>> {
    search(c, d, false)
}

/// Exhaustive colimit search.
pub fn search_colimit<C: Category>(c: &C, d: &Diagram<C::Obj, C::Mor>) -> Option<Cone<C::Obj, C::Mor>> {
    search(c, d, true)
}

pub fn search_mediate<C: Category>(
    c: &C,
    _d: &Diagram<C::Obj, C::Mor>,
    lim: &Cone<C::Obj, C::Mor>,
    cone: &Cone<C::Obj, C::Mor>,
) -> Option<C::Mor> {
    let m = mediators(c, lim, cone, false, 2);
    (m.len() == 1).then(|| m[0].clone())
}

pub fn search_comediate<C: Category>(
    c: &C,
    _d: &Diagram<C::Obj, C::Mor>,
    colim: &Cone<C::Obj, C::Mor>,
    cocone: &Cone<C::Obj, C::Mor>,
) -> Option<C::Mor> {
    let m = mediators(c, colim, cocone, true, 2);
    (m.len() == 1).then(|| m[0].clone())
}

/// Whether `cone` is a limit cone (`colimit = false`) or a colimit cocone,
/// checked against every (co)cone over the enumerated objects.
pub fn is_limit_cone<C: Category>(
    c: &C,
    d: &Diagram<C::Obj, C::Mor>,
    cone: &Cone<C::Obj, C::Mor>,
    colimit: bool,
) -> bool {
    if cone.legs.len() != d.nodes.len() || !commutes_all(c, d, &cone.legs, colimit) {
        return false;
    }
    all_cones(c, d, colimit)
        .iter()
        .all(|k| mediators(c, cone, k, colimit, 2).len() == 1)
}
