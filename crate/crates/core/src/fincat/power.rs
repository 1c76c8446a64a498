use std::sync::Arc;

use super::{Category, Cone, Diagram, FinCategory, Limits};

/// The power `X^n` of a table category: objects and morphisms are
/// `n`-tuples, everything is computed coordinatewise.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PowerCat {
    pub base: Arc<FinCategory>,
    pub n: usize,
}

impl PowerCat {
    pub fn new(base: Arc<FinCategory>, n: usize) -> Self {
        PowerCat { base, n }
    }

    fn coordinate(&self, d: &Diagram<Vec<usize>, Vec<usize>>, i: usize) -> Diagram<usize, usize> {
        Diagram {
            nodes: d.nodes.iter().map(|x| x[i]).collect(),
            edges: d.edges.iter().map(|(a, b, e)| (*a, *b, e[i])).collect(),
        }
    }

    fn coordinate_cone(&self, c: &Cone<Vec<usize>, Vec<usize>>, i: usize) -> Cone<usize, usize> {
        Cone { apex: c.apex[i], legs: c.legs.iter().map(|l| l[i]).collect() }
    }

    fn assemble(&self, parts: Vec<Cone<usize, usize>>, legs: usize) -> Cone<Vec<usize>, Vec<usize>> {
        Cone {
            apex: parts.iter().map(|c| c.apex).collect(),
            legs: (0..legs).map(|k| parts.iter().map(|c| c.legs[k]).collect()).collect(),
        }
    }
}

fn product<T: Clone>(lists: &[Vec<T>]) -> Vec<Vec<T>> {
    let mut out = vec![Vec::new()];
    for l in lists {
        let mut next = Vec::with_capacity(out.len() * l.len());
        for prefix in &out {
            for x in l {
                let mut p = prefix.clone();
                p.push(x.clone());
                next.push(p);
            }
        }
        out = next;
    }
    out
}

impl Category for PowerCat {
    type Obj = Vec<usize>;
    type Mor = Vec<usize>;

    fn dom(&self, f: &Vec<usize>) -> Vec<usize> {
        f.iter().map(|g| self.base.dom(g)).collect()
    }
    fn cod(&self, f: &Vec<usize>) -> Vec<usize> {
        f.iter().map(|g| self.base.cod(g)).collect()
    }
    fn id(&self, x: &Vec<usize>) -> Vec<usize> {
        x.iter().map(|y| self.base.id(y)).collect()
    }
    fn compose(&self, g: &Vec<usize>, f: &Vec<usize>) -> Vec<usize> {
        g.iter().zip(f).map(|(a, b)| self.base.compose(a, b)).collect()
    }
    fn hom(&self, x: &Vec<usize>, y: &Vec<usize>) -> Vec<Vec<usize>> {
        let lists: Vec<Vec<usize>> = x.iter().zip(y).map(|(a, b)| self.base.hom(a, b)).collect();
        product(&lists)
    }
    fn objects(&self) -> Vec<Vec<usize>> {
        product(&vec![self.base.objects(); self.n])
    }
    fn inverse(&self, f: &Vec<usize>) -> Option<Vec<usize>> {
        f.iter().map(|g| self.base.inverse(g)).collect()
    }
    fn isos(&self, x: &Vec<usize>, y: &Vec<usize>) -> Vec<Vec<usize>> {
        let lists: Vec<Vec<usize>> = x.iter().zip(y).map(|(a, b)| self.base.isos(a, b)).collect();
        product(&lists)
    }
    fn pick_iso(&self, x: &Vec<usize>, key: u64) -> Vec<usize> {
        x.iter()
            .enumerate()
            .map(|(i, a)| {
                let k = key.wrapping_mul(0x9E37_79B9_7F4A_7C15).wrapping_add(i as u64).rotate_left(17);
                self.base.pick_iso(a, k)
            })
            .collect()
    }
}

impl Limits for PowerCat {
    fn limit(&self, d: &Diagram<Vec<usize>, Vec<usize>>) -> Option<Cone<Vec<usize>, Vec<usize>>> {
        let parts: Option<Vec<_>> = (0..self.n).map(|i| self.base.limit(&self.coordinate(d, i))).collect();
        Some(self.assemble(parts?, d.nodes.len()))
    }
    fn colimit(&self, d: &Diagram<Vec<usize>, Vec<usize>>) -> Option<Cone<Vec<usize>, Vec<usize>>> {
        let parts: Option<Vec<_>> = (0..self.n).map(|i| self.base.colimit(&self.coordinate(d, i))).collect();
        Some(self.assemble(parts?, d.nodes.len()))
    }
    fn mediate(
        &self,
        d: &Diagram<Vec<usize>, Vec<usize>>,
        lim: &Cone<Vec<usize>, Vec<usize>>,
        cone: &Cone<Vec<usize>, Vec<usize>>,
    ) -> Option<Vec<usize>> {
        (0..self.n)
            .map(|i| {
                self.base.mediate(&self.coordinate(d, i), &self.coordinate_cone(lim, i), &self.coordinate_cone(cone, i))
            })
            .collect()
    }
    fn comediate(
        &self,
        d: &Diagram<Vec<usize>, Vec<usize>>,
        colim: &Cone<Vec<usize>, Vec<usize>>,
        cocone: &Cone<Vec<usize>, Vec<usize>>,
    ) -> Option<Vec<usize>> {
        (0..self.n)
            .map(|i| {
                self.base.comediate(
                    &self.coordinate(d, i),
                    &self.coordinate_cone(colim, i),
                    &self.coordinate_cone(cocone, i),
                )
            })
            .collect()
    }
}
