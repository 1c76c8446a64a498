use std::fmt::Write;

use super::ast::*;

fn join(names: &[Name]) -> String {
    names.iter().map(|n| n.text.as_str()).collect::<Vec<_>>().join(", ")
}

fn product(p: &Product) -> String {
    format!("{} . {} = {}", p.left.text, p.right.text, p.result.text)
}

/// Canonical text of one declaration.
pub fn print_decl(d: &Decl) -> String {
    let mut s = String::new();
    let kw = d.kind.keyword();
    let name = &d.name.text;
    match &d.kind {
        DeclKind::Category { objects, homs, compose } => {
            let _ = writeln!(s, "{kw} {name} {{");
            let _ = writeln!(s, "  objects: {};", join(objects));
            for h in homs {
                let _ = writeln!(s, "  hom({}, {}): {};", h.dom.text, h.cod.text, join(&h.names));
            }
            for p in compose {
                let _ = writeln!(s, "  compose: {};", product(p));
            }
            s.push('}');
        }
        DeclKind::Map { dom, cod, image } => {
            let im: Vec<String> = image.iter().map(|i| i.to_string()).collect();
            let _ = write!(s, "{kw} {name} : [{dom}] -> [{cod}] = [{}]", im.join(", "));
        }
        DeclKind::Monoid { elements, table } => {
            let _ = write!(s, "{kw} {name} {{ {};", join(elements));
            let entries: Vec<String> = table.iter().map(product).collect();
            if !entries.is_empty() {
                let _ = write!(s, " {}", entries.join("; "));
            }
            s.push_str(" }");
        }
        DeclKind::Functor { source, target, assign } => {
            let _ = writeln!(s, "{kw} {name} : {} -> {} {{", source.text, target.text);
            for (a, b) in assign {
                let _ = writeln!(s, "  {} -> {};", a.text, b.text);
            }
            s.push('}');
        }
        DeclKind::NatTrans { source, target, components } => {
            let _ = writeln!(s, "{kw} {name} : {} => {} {{", source.text, target.text);
            for (a, b) in components {
                let _ = writeln!(s, "  {} : {};", a.text, b.text);
            }
            s.push('}');
        }
        DeclKind::Precategory(p) => {
            let (f, a) = match p {
                PreSpec::Sigma(a) => ("sigma", a),
                PreSpec::Nerve(a) => ("nerve", a),
                PreSpec::Kernel(a) => ("kernel", a),
            };
            let _ = write!(s, "{kw} {name} = {f}({})", a.text);
        }
        DeclKind::Indexed(spec) => {
            let body = match spec {
                IndexedSpec::Slice { bound } => format!("slice(bound = {bound})"),
                IndexedSpec::Diagrams { bound, shapes } => {
                    format!("diagrams(bound = {bound}, shapes = [{}])", join(shapes))
                }
                IndexedSpec::Fam { bound, of } => format!("fam(bound = {bound}, of = {})", of.text),
            };
            let _ = write!(s, "{kw} {name} = {body}");
        }
        DeclKind::Pseudofunctor { indexed, precategory, twist } => {
            let _ = write!(s, "{kw} {name} = {} on {}", indexed.text, precategory.text);
            if let Some(t) = twist {
                let _ = write!(s, " twist {t}");
            }
        }
        DeclKind::Adjunction { right } => {
            let _ = write!(s, "{kw} {name} = left_adjoint({})", right.text);
        }
    }
    s
}

/// Canonical text of a document, one blank line between declarations.
pub fn print(doc: &Document) -> String {
    let mut out = doc.decls.iter().map(print_decl).collect::<Vec<_>>().join("\n\n");
    out.push('\n');
    out
}

#[cfg(test)]
mod tests {
    use super::super::parser::parse;
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn printed_category() {
        let d = parse("category C{objects:a,b;hom(a,b):f;compose:f.id_a=f;}").unwrap();
        assert_eq!(
            print(&d),
            "category C {\n  objects: a, b;\n  hom(a, b): f;\n  compose: f . id_a = f;\n}\n"
        );
    }

    fn name() -> impl Strategy<Value = Name> {
        prop_oneof![
            "[a-zA-Z_][a-zA-Z0-9_']{0,5}".prop_map(Name::new),
            (0usize..1000).prop_map(|n| Name::new(n.to_string())),
        ]
    }

    fn names() -> impl Strategy<Value = Vec<Name>> {
        prop::collection::vec(name(), 1..4)
    }

    fn products() -> impl Strategy<Value = Vec<Product>> {
        prop::collection::vec(
            (name(), name(), name()).prop_map(|(left, right, result)| Product { left, right, result }),
            0..3,
        )
    }

    fn pairs() -> impl Strategy<Value = Vec<(Name, Name)>> {
        prop::collection::vec((name(), name()), 0..4)
    }

    fn kind() -> impl Strategy<Value = DeclKind> {
        prop_oneof![
            (
                names(),
                prop::collection::vec(
                    (name(), name(), names()).prop_map(|(dom, cod, names)| HomDecl { dom, cod, names }),
                    0..3
                ),
                products()
            )
                .prop_map(|(objects, homs, compose)| DeclKind::Category { objects, homs, compose }),
            (0usize..5, 0usize..5, prop::collection::vec(0usize..9, 0..5))
                .prop_map(|(dom, cod, image)| DeclKind::Map { dom, cod, image }),
            (names(), products()).prop_map(|(elements, table)| DeclKind::Monoid { elements, table }),
            (name(), name(), pairs()).prop_map(|(source, target, assign)| DeclKind::Functor { source, target, assign }),
            (name(), name(), pairs())
                .prop_map(|(source, target, components)| DeclKind::NatTrans { source, target, components }),
            (0..3, name()).prop_map(|(k, n)| DeclKind::Precategory(match k {
                0 => PreSpec::Sigma(n),
                1 => PreSpec::Nerve(n),
                _ => PreSpec::Kernel(n),
            })),
            (0usize..9).prop_map(|bound| DeclKind::Indexed(IndexedSpec::Slice { bound })),
            (0usize..9, names()).prop_map(|(bound, shapes)| DeclKind::Indexed(IndexedSpec::Diagrams { bound, shapes })),
            (0usize..9, name()).prop_map(|(bound, of)| DeclKind::Indexed(IndexedSpec::Fam { bound, of })),
            (name(), name(), prop::option::of(0u64..100))
                .prop_map(|(indexed, precategory, twist)| DeclKind::Pseudofunctor { indexed, precategory, twist }),
            name().prop_map(|right| DeclKind::Adjunction { right }),
        ]
    }

    fn document() -> impl Strategy<Value = Document> {
        prop::collection::vec((name(), kind()), 0..6).prop_map(|ds| Document {
            decls: ds.into_iter().map(|(name, kind)| Decl { name, kind, span: Default::default() }).collect(),
        })
    }

    proptest! {
        #[test]
        fn parse_print_round_trip(doc in document()) {
            let text = print(&doc);
            let back = parse(&text).map_err(|e| TestCaseError::fail(format!("{e}\n{text}")))?;
            prop_assert_eq!(back.without_spans(), doc);
        }

        #[test]
        fn printing_is_idempotent(doc in document()) {
            let once = print(&doc);
            let twice = print(&parse(&once).unwrap());
            prop_assert_eq!(once, twice);
        }
    }
}
