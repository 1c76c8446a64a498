use std::sync::Arc;

use super::{Category, Cone, Diagram, Limits};

/// The opposite of a category. Objects and morphisms are shared with the
/// original; only domains, codomains and composition order are swapped.
pub struct Op<C> {
    inner: Arc<C>,
}

impl<C> Op<C> {
    pub fn new(inner: Arc<C>) -> Self {
        Op { inner }
    }

    pub fn inner(&self) -> &Arc<C> {
        &self.inner
    }
}

impl<C: Category> Category for Op<C> {
    type Obj = C::Obj;
    type Mor = C::Mor;

    fn dom(&self, f: &C::Mor) -> C::Obj {
        self.inner.cod(f)
    }
    fn cod(&self, f: &C::Mor) -> C::Obj {
        self.inner.dom(f)
    }
    fn id(&self, x: &C::Obj) -> C::Mor {
        self.inner.id(x)
    }
    fn compose(&self, g: &C::Mor, f: &C::Mor) -> C::Mor {
        self.inner.compose(f, g)
    }
    fn hom(&self, x: &C::Obj, y: &C::Obj) -> Vec<C::Mor> {
        self.inner.hom(y, x)
    }
    fn objects(&self) -> Vec<C::Obj> {
        self.inner.objects()
    }
    fn inverse(&self, f: &C::Mor) -> Option<C::Mor> {
        self.inner.inverse(f)
    }
    fn is_iso(&self, f: &C::Mor) -> bool {
        self.inner.is_iso(f)
    }
    fn isos(&self, x: &C::Obj, y: &C::Obj) -> Vec<C::Mor> {
        self.inner.isos(y, x)
    }
    fn is_isomorphic(&self, x: &C::Obj, y: &C::Obj) -> bool {
        self.inner.is_isomorphic(y, x)
    }
}

fn flip<O: Clone, M: Clone>(d: &Diagram<O, M>) -> Diagram<O, M> {
    Diagram {
        nodes: d.nodes.clone(),
        edges: d.edges.iter().map(|(i, j, e)| (*j, *i, e.clone())).collect(),
    }
}

impl<C: Limits> Limits for Op<C> {
    fn limit(&self, d: &Diagram<C::Obj, C::Mor>) -> Option<Cone<C::Obj, C::Mor>> {
        self.inner.colimit(&flip(d))
    }
    fn colimit(&self, d: &Diagram<C::Obj, C::Mor>) -> Option<Cone<C::Obj, C::Mor>> {
        self.inner.limit(&flip(d))
    }
    fn mediate(
        &self,
        d: &Diagram<C::Obj, C::Mor>,
        lim: &Cone<C::Obj, C::Mor>,
        cone: &Cone<C::Obj, C::Mor>,
    ) -> Option<C::Mor> {
        self.inner.comediate(&flip(d), lim, cone)
    }
    fn comediate(
        &self,
        d: &Diagram<C::Obj, C::Mor>,
        colim: &Cone<C::Obj, C::Mor>,
        cocone: &Cone<C::Obj, C::Mor>,
    ) -> Option<C::Mor> {
        self.inner.mediate(&flip(d), colim, cocone)
    }
}
