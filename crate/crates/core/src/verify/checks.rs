use std::collections::BTreeSet;

use crate::graph::{takasaki_z_edge, takasaki_z_window, ComponentDecomposition, DirectedGraph};
use crate::group::{
    commutator_subgroup_with, conjugacy_classes, cosets, enumerate_automorphisms,
    fixed_point_subgroup, image_id_minus_t, is_normal, Automorphism, CosetSide, FiniteGroup,
};
use crate::partition::normalize;
use crate::quandle::{verify_quandle_axioms, Quandle};

use super::registry::{quandles_of_order, AutomorphismFamily, QuandleFamily};
use super::report::{ensure, run, Stop, TheoremId, VerificationReport, Witness};
use super::VerifyError;
use crate::dsl::GroupSpec;

const S4_COMPONENT: &str = include_str!("../../data/s4_component.txt");

fn named(names: &[String], xs: &[usize]) -> Vec<String> {
    xs.iter().map(|&x| names[x].clone()).collect()
}

/// Adds `context: ` in front of a witness detail.
fn in_context(stop: Stop, context: &str) -> Stop {
    let prefix = |d: &mut String| *d = format!("{context}: {d}");
    match stop {
        Stop::Witness(mut w) => {
            match &mut w {
                Witness::Element { detail, .. }
                | Witness::Pair { detail, .. }
                | Witness::Sets { detail, .. }
                | Witness::Note { detail } => prefix(detail),
            }
            Stop::Witness(w)
        }
        e => e,
    }
}

/// The components must be exactly `expected` (any order).
fn same_blocks(found: &ComponentDecomposition, expected: &[Vec<usize>], names: &[String]) -> Result<(), Stop> {
    let expected = normalize(expected);
    let found_blocks = normalize(&found.components);
    if expected == found_blocks {
        return Ok(());
    }
    for block in &expected {
        let v = block[0];
        let got = found.component_of(v).unwrap_or(&[]);
        if got != block.as_slice() {
            return Err(Witness::sets(
                format!("component of {}", names[v]),
                named(names, block),
                named(names, got),
            )
            .into());
        }
    }
    Err(Witness::note(format!(
        "expected {} components, found {}",
        expected.len(),
        found_blocks.len()
    ))
    .into())
}

/// Every ordered pair inside every component is an edge.
fn components_complete(graph: &DirectedGraph, components: &[Vec<usize>]) -> Result<(), Stop> {
    for c in components {
        for &u in c {
            for &v in c {
                ensure(graph.has_edge(u, v), || {
                    Witness::pair(graph.name(u), graph.name(v), "missing edge inside a component")
                })?;
            }
        }
    }
    Ok(())
}

fn weak_equals_strong(graph: &DirectedGraph) -> Result<(), Stop> {
    let strong = graph.strongly_connected_components();
    same_blocks(&graph.weakly_connected_components(), &strong.components, graph.names())
}

// ---------------------------------------------------------------------------

fn trivial_edgeless_body(quandles: &[Quandle]) -> Result<(), Stop> {
    for q in quandles {
        let graph = DirectedGraph::cayley(q);
        let edgeless = graph.is_edgeless();
        if edgeless != q.is_trivial() {
            let witness = match graph.edges().into_iter().find(|(u, v)| u != v) {
                Some((u, v)) => Witness::pair(q.name(u), q.name(v), format!("{} is trivial but has an edge", q.label())),
                None => {
                    let x = (0..q.order())
                        .find(|&x| (0..q.order()).any(|y| q.rhd(x, y) != x))
                        .unwrap_or(0);
                    Witness::element(q.name(x), format!("{} is nontrivial but Γ has only loops", q.label()))
                }
            };
            return Err(witness.into());
        }
    }
    Ok(())
}

/// `Γ_Q` has only loops iff `Q` is trivial, over `T_n` and every registered
/// quandle of order `n`.
pub fn check_trivial_edgeless(n: usize, nonabelian: &[GroupSpec]) -> Result<VerificationReport, VerifyError> {
    let quandles = quandles_of_order(n, nonabelian)?;
    run(TheoremId::TrivialEdgeless, format!("n={n} ({} quandles)", quandles.len()), || {
        let t = DirectedGraph::cayley(&Quandle::trivial(n)?);
        ensure(t.is_edgeless(), || Witness::note(format!("Γ(T_{n}) has a non-loop edge")))?;
        trivial_edgeless_body(&quandles)
    })
}

/// Same biconditional over caller-supplied quandles.
pub fn check_trivial_edgeless_for(label: &str, quandles: &[Quandle]) -> Result<VerificationReport, VerifyError> {
    run(TheoremId::TrivialEdgeless, label, || trivial_edgeless_body(quandles))
}

/// Components of `Γ(Conj G)` are the conjugacy classes and each is complete.
pub fn check_conjugation_components(g: &FiniteGroup) -> Result<VerificationReport, VerifyError> {
    run(TheoremId::ConjugationComponents, g.label(), || {
        let q = Quandle::conjugation(g)?;
        let graph = DirectedGraph::cayley(&q);
        let classes = conjugacy_classes(g);
        let scc = graph.strongly_connected_components();
        same_blocks(&scc, &classes, graph.names())?;
        components_complete(&graph, &scc.components)?;
        ensure(graph.is_symmetric(), || {
            let (u, v) = graph.asymmetric_edge().unwrap();
            Witness::pair(graph.name(u), graph.name(v), "edge without a reverse")
        })?;
        weak_equals_strong(&graph)
    })
}

/// `Γ(R_n)` is `K_n` for odd `n` and two disjoint copies of `K_(n/2)` for
/// even `n`.
pub fn check_dihedral_quandle(n: usize) -> Result<VerificationReport, VerifyError> {
    run(TheoremId::DihedralQuandle, format!("R_{n}"), || {
        let graph = DirectedGraph::cayley(&Quandle::dihedral(n)?);
        ensure(graph.is_symmetric(), || {
            let (u, v) = graph.asymmetric_edge().unwrap();
            Witness::pair(graph.name(u), graph.name(v), "edge without a reverse")
        })?;
        let scc = graph.strongly_connected_components();
        let (count, size) = if n % 2 == 1 { (1, n) } else { (2, n / 2) };
        ensure(scc.count() == count && scc.sizes().iter().all(|&s| s == size), || {
            Witness::note(format!(
                "expected {count} components of size {size}, found sizes {:?}",
                scc.sizes()
            ))
        })?;
        let k = DirectedGraph::complete(size);
        for c in &scc.components {
            let sub = graph.induced_subgraph(c)?;
            let map = sub.is_isomorphic_capped(&k, size.max(1))?;
            let ok = map.as_ref().is_some_and(|m| sub.is_isomorphism_witness(&k, m));
            ensure(ok, || {
                Witness::element(graph.name(c[0]), format!("component is not K_{size}"))
            })?;
        }
        Ok(())
    })
}

/// Takasaki quandle of `Z` on `-w..=w`: `a -> c` iff `c = 2b - a` for some
/// `b` (searched in `-3w..=3w`), iff `a` and `c` have the same parity; the
/// window splits into the two parity classes, each complete.
pub fn check_takasaki_window(w: usize) -> Result<VerificationReport, VerifyError> {
    run(TheoremId::TakasakiWindow, format!("w={w}"), || {
        let window = takasaki_z_window(w);
        let width = window.width;
        for a in -width..=width {
            for c in -width..=width {
                let brute = (-3 * width..=3 * width).any(|b| c == 2 * b - a);
                let graph_edge = window.graph.has_edge(window.vertex(a), window.vertex(c));
                ensure(brute == takasaki_z_edge(a, c) && brute == graph_edge, || {
                    Witness::pair(
                        a.to_string(),
                        c.to_string(),
                        format!("b-search says {brute}, parity rule says {}", takasaki_z_edge(a, c)),
                    )
                })?;
            }
        }
        let parity = |p: i64| -> Vec<usize> {
            (-width..=width)
                .filter(|a| a.rem_euclid(2) == p)
                .map(|a| window.vertex(a))
                .collect()
        };
        let expected: Vec<Vec<usize>> = [parity(0), parity(1)]
            .into_iter()
            .filter(|b| !b.is_empty())
            .collect();
        ensure(window.graph.is_symmetric(), || {
            let (u, v) = window.graph.asymmetric_edge().unwrap();
            Witness::pair(window.graph.name(u), window.graph.name(v), "edge without a reverse")
        })?;
        let scc = window.graph.strongly_connected_components();
        same_blocks(&scc, &expected, window.graph.names())?;
        components_complete(&window.graph, &scc.components)
    })
}

fn alexander_components_body(g: &FiniteGroup, t: &Automorphism) -> Result<(), Stop> {
    let image = image_id_minus_t(g, t)?;
    let q = Quandle::alexander(g, t)?;
    let graph = DirectedGraph::cayley(&q);
    let scc = graph.strongly_connected_components();
    let left = cosets(g, &image, CosetSide::Left)?;
    same_blocks(&scc, &left.blocks, graph.names())?;
    ensure(scc.count() == g.order() / image.order(), || {
        Witness::note(format!(
            "{} components but |G|/|im(id - t)| = {}",
            scc.count(),
            g.order() / image.order()
        ))
    })?;
    components_complete(&graph, &scc.components)?;
    weak_equals_strong(&graph)
}

/// Components of `Γ(A_t(G))` are the cosets of `im(id - t)`, each complete,
/// and there are `|G| / |im(id - t)|` of them.
pub fn check_alexander_components(g: &FiniteGroup, t: &Automorphism) -> Result<VerificationReport, VerifyError> {
    if !g.is_abelian() {
        return Err(crate::group::GroupError::NotAbelian(g.label().to_string()).into());
    }
    run(
        TheoremId::AlexanderComponents,
        format!("{} t={}", g.label(), t.label()),
        || alexander_components_body(g, t),
    )
}

/// [`check_alexander_components`] for every automorphism of `g`, as one report.
pub fn check_alexander_components_all(g: &FiniteGroup) -> Result<VerificationReport, VerifyError> {
    if !g.is_abelian() {
        return Err(crate::group::GroupError::NotAbelian(g.label().to_string()).into());
    }
    let autos = enumerate_automorphisms(g)?;
    run(
        TheoremId::AlexanderComponents,
        format!("{} (all {} automorphisms)", g.label(), autos.len()),
        || {
            for t in &autos {
                alexander_components_body(g, t).map_err(|s| in_context(s, t.label()))?;
            }
            Ok(())
        },
    )
}

fn alexander_iso_body(g: &FiniteGroup, t1: &Automorphism, t2: &Automorphism) -> Result<(), Stop> {
    let size1 = image_id_minus_t(g, t1)?.order();
    let size2 = image_id_minus_t(g, t2)?.order();
    let g1 = DirectedGraph::cayley(&Quandle::alexander(g, t1)?);
    let g2 = DirectedGraph::cayley(&Quandle::alexander(g, t2)?);
    let map = g1.is_isomorphic(&g2)?;
    if let Some(m) = &map {
        ensure(g1.is_isomorphism_witness(&g2, m), || {
            Witness::note("isomorphism search returned an invalid map")
        })?;
    }
    ensure(map.is_some() == (size1 == size2), || {
        Witness::pair(
            t1.label(),
            t2.label(),
            format!(
                "|im(id - t)| = {size1} vs {size2} but graphs are {}isomorphic",
                if map.is_some() { "" } else { "not " }
            ),
        )
    })
}

/// `Γ(A_t1(G)) ≅ Γ(A_t2(G))` iff `|im(id - t1)| = |im(id - t2)|`.
pub fn check_alexander_iso(
    g: &FiniteGroup,
    t1: &Automorphism,
    t2: &Automorphism,
) -> Result<VerificationReport, VerifyError> {
    if !g.is_abelian() {
        return Err(crate::group::GroupError::NotAbelian(g.label().to_string()).into());
    }
    run(
        TheoremId::AlexanderIso,
        format!("{} t1={} t2={}", g.label(), t1.label(), t2.label()),
        || alexander_iso_body(g, t1, t2),
    )
}

/// Up to two automorphisms per value of `|im(id - t)|`: the first and last
/// in enumeration order.
pub fn iso_representatives(g: &FiniteGroup) -> Result<Vec<Automorphism>, VerifyError> {
    let autos = enumerate_automorphisms(g)?;
    let mut by_size: std::collections::BTreeMap<usize, Vec<&Automorphism>> = Default::default();
    for t in &autos {
        by_size.entry(image_id_minus_t(g, t)?.order()).or_default().push(t);
    }
    let mut reps = Vec::new();
    for list in by_size.values() {
        reps.push(list[0].clone());
        if list.len() > 1 {
            reps.push(list[list.len() - 1].clone());
        }
    }
    Ok(reps)
}

/// [`check_alexander_iso`] over all pairs of [`iso_representatives`].
pub fn check_alexander_iso_all(g: &FiniteGroup) -> Result<VerificationReport, VerifyError> {
    if !g.is_abelian() {
        return Err(crate::group::GroupError::NotAbelian(g.label().to_string()).into());
    }
    let reps = iso_representatives(g)?;
    run(
        TheoremId::AlexanderIso,
        format!("{} ({} representative automorphisms)", g.label(), reps.len()),
        || {
            for (i, t1) in reps.iter().enumerate() {
                for t2 in &reps[i + 1..] {
                    alexander_iso_body(g, t1, t2)?;
                }
            }
            Ok(())
        },
    )
}

fn regularity_body(g: &FiniteGroup, phi: &Automorphism) -> Result<(), Stop> {
    let fixed = fixed_point_subgroup(g, phi)?;
    let degree = fixed.index();
    let graph = DirectedGraph::cayley(&Quandle::generalized_alexander(g, phi)?);
    for (v, (out, inn)) in graph.degrees().into_iter().enumerate() {
        ensure(out == degree && inn == degree, || {
            Witness::element(
                graph.name(v),
                format!("degrees (out {out}, in {inn}) but [G : Fix φ] = {degree}"),
            )
        })?;
    }
    Ok(())
}

/// Every vertex of `Γ(GAlex(G, φ))` has in- and out-degree `[G : Fix φ]`.
pub fn check_generalized_regularity(g: &FiniteGroup, phi: &Automorphism) -> Result<VerificationReport, VerifyError> {
    run(
        TheoremId::GeneralizedRegularity,
        format!("{} φ={}", g.label(), phi.label()),
        || regularity_body(g, phi),
    )
}

pub fn check_generalized_regularity_all(family: &AutomorphismFamily) -> Result<VerificationReport, VerifyError> {
    run(TheoremId::GeneralizedRegularity, family.label.clone(), || {
        for phi in &family.automorphisms {
            regularity_body(&family.group, phi).map_err(|s| in_context(s, phi.label()))?;
        }
        Ok(())
    })
}

fn orbit_coset_body(g: &FiniteGroup, h: usize) -> Result<(), Stop> {
    let phi = Automorphism::inner(g, h)?;
    let q = Quandle::generalized_alexander(g, &phi)?;
    let graph = DirectedGraph::cayley(&q);
    let n = commutator_subgroup_with(g, h)?;
    ensure(is_normal(g, &n), || Witness::sets("N is not normal", vec![], named(g.names(), n.members())))?;

    for x in g.elements() {
        let orbit = q.forward_orbit(x)?;
        let mut coset: Vec<usize> = n.members().iter().map(|&m| g.mul(x, m)).collect();
        coset.sort_unstable();
        ensure(orbit == coset, || {
            Witness::sets(format!("forward orbit of {}", g.name(x)), named(g.names(), &coset), named(g.names(), &orbit))
        })?;
    }

    let left = cosets(g, &n, CosetSide::Left)?;
    let scc = graph.strongly_connected_components();
    same_blocks(&scc, &left.blocks, graph.names())?;

    // τ_c(x) = x c carries N onto the coset Nc = cN and is a graph
    // isomorphism between the induced subgraphs
    let base = graph.induced_subgraph(n.members())?;
    for block in &left.blocks {
        let c = block[0];
        let target = graph.induced_subgraph(block)?;
        let map: Vec<usize> = n
            .members()
            .iter()
            .map(|&m| block.binary_search(&g.mul(m, c)).unwrap_or(usize::MAX))
            .collect();
        ensure(base.is_isomorphism_witness(&target, &map), || {
            Witness::element(g.name(c), "x -> x c is not an isomorphism from N onto this coset")
        })?;
        let plain = base.is_isomorphic(&target)?;
        ensure(plain.is_some(), || Witness::element(g.name(c), "coset component not isomorphic to N"))?;
    }
    Ok(())
}

/// For `φ` inner by `h` with `N = <[h, g] : g ∈ G>`: `N` is normal, the
/// forward orbit of `x` is `xN`, the components of `Γ` are the left cosets of
/// `N`, and right multiplication carries `N` isomorphically onto each one.
pub fn check_orbit_coset(g: &FiniteGroup, h: usize) -> Result<VerificationReport, VerifyError> {
    g.check_element(h)?;
    run(
        TheoremId::OrbitCoset,
        format!("{} h={}", g.label(), g.name(h)),
        || orbit_coset_body(g, h),
    )
}

pub fn check_orbit_coset_all(g: &FiniteGroup) -> Result<VerificationReport, VerifyError> {
    run(TheoremId::OrbitCoset, format!("{} (all h)", g.label()), || {
        for h in g.elements() {
            orbit_coset_body(g, h).map_err(|s| in_context(s, &format!("h={}", g.name(h))))?;
        }
        Ok(())
    })
}

/// `D_m` with `φ` inner by `r`: each vertex has a single non-loop edge,
/// `r^i -> r^(i+2)` and `r^i s -> r^(i+2) s`, so every component is a
/// directed cycle: four of length `m/2` for even `m`, two of length `m` for
/// odd `m`, with diameter one less than the length. The graph is symmetric
/// exactly when the cycles have length at most 2, i.e. `m ∈ {2, 4}`.
pub fn check_dihedral_inner_example(m: usize) -> Result<VerificationReport, VerifyError> {
    run(TheoremId::DihedralInnerExample, format!("D{m}"), || {
        let g = FiniteGroup::dihedral(m)?;
        let r = g.element_by_name("r")?;
        let phi = Automorphism::inner(&g, r)?;
        let graph = DirectedGraph::cayley(&Quandle::generalized_alexander(&g, &phi)?);
        let shift = |v: usize| if v < m { (v + 2) % m } else { m + (v - m + 2) % m };
        for v in g.elements() {
            let mut expected = vec![v, shift(v)];
            expected.sort_unstable();
            expected.dedup();
            ensure(graph.out_neighbors(v) == expected.as_slice(), || {
                Witness::sets(
                    format!("out-neighbours of {}", g.name(v)),
                    named(g.names(), &expected),
                    named(g.names(), graph.out_neighbors(v)),
                )
            })?;
        }
        let length = if m.is_multiple_of(2) { m / 2 } else { m };
        let count = 2 * m / length;
        let scc = graph.strongly_connected_components();
        ensure(scc.count() == count && scc.sizes().iter().all(|&s| s == length), || {
            Witness::note(format!(
                "expected {count} cycles of length {length}, found sizes {:?}",
                scc.sizes()
            ))
        })?;
        for c in &scc.components {
            let d = graph.component_diameter(c)?;
            ensure(d == length - 1, || {
                Witness::element(g.name(c[0]), format!("diameter {d}, expected {}", length - 1))
            })?;
        }
        let symmetric = length <= 2;
        ensure(graph.is_symmetric() == symmetric, || match graph.asymmetric_edge() {
            Some((u, v)) => Witness::pair(g.name(u), g.name(v), "edge without a reverse"),
            None => Witness::note(format!("Γ is symmetric although cycles have length {length}")),
        })
    })
}

/// The `S4` example as vertex names and directed edges (both directions of
/// every listed pair, plus loops).
pub fn s4_fixture() -> (Vec<String>, BTreeSet<(String, String)>) {
    let mut vertices = Vec::new();
    let mut edges = BTreeSet::new();
    for line in S4_COMPONENT.lines().map(str::trim) {
        let fields: Vec<&str> = line.split_whitespace().collect();
        match fields.as_slice() {
            ["vertex", v] => vertices.push(v.to_string()),
            ["edge", a, b] => {
                edges.insert((a.to_string(), b.to_string()));
                edges.insert((b.to_string(), a.to_string()));
            }
            ["loop", v] => {
                edges.insert((v.to_string(), v.to_string()));
            }
            _ => {}
        }
    }
    (vertices, edges)
}

/// `S4` with `φ` inner by `(12)`: `Fix φ = {id, (12), (34), (12)(34)}`, `Γ`
/// is 6-regular, and the component of the identity is `N = <[(12), g]>` and
/// carries the 12-vertex graph of the stored fixture, which is not complete.
pub fn check_s4_example() -> Result<VerificationReport, VerifyError> {
    run(TheoremId::S4Example, "S4 φ=inner:(12)", || {
        let g = FiniteGroup::symmetric(4)?;
        let h = g.element_by_name("(12)")?;
        let phi = Automorphism::inner(&g, h)?;
        let fixed = fixed_point_subgroup(&g, &phi)?;
        let expected_fix: BTreeSet<String> =
            ["id", "(12)", "(34)", "(12)(34)"].iter().map(|s| s.to_string()).collect();
        let found_fix: BTreeSet<String> = named(g.names(), fixed.members()).into_iter().collect();
        ensure(found_fix == expected_fix, || {
            Witness::sets("Fix φ", expected_fix.iter().cloned().collect(), found_fix.iter().cloned().collect())
        })?;

        let graph = DirectedGraph::cayley(&Quandle::generalized_alexander(&g, &phi)?);
        for (v, (out, inn)) in graph.degrees().into_iter().enumerate() {
            ensure(out == 6 && inn == 6, || {
                Witness::element(g.name(v), format!("degrees (out {out}, in {inn}), expected 6"))
            })?;
        }

        let (vertices, golden) = s4_fixture();
        let scc = graph.strongly_connected_components();
        let component = scc.component_of(g.identity()).unwrap_or(&[]);
        let found: BTreeSet<String> = named(g.names(), component).into_iter().collect();
        let expected: BTreeSet<String> = vertices.iter().cloned().collect();
        ensure(found == expected, || {
            Witness::sets("component of id", expected.iter().cloned().collect(), found.iter().cloned().collect())
        })?;

        let n = commutator_subgroup_with(&g, h)?;
        ensure(n.members() == component, || {
            Witness::sets(
                "N = <[(12), g]> versus the component of id",
                named(g.names(), component),
                named(g.names(), n.members()),
            )
        })?;

        let sub = graph.induced_subgraph(component)?;
        let edges: BTreeSet<(String, String)> = sub
            .edges()
            .into_iter()
            .map(|(u, v)| (sub.name(u).to_string(), sub.name(v).to_string()))
            .collect();
        if let Some((a, b)) = golden.symmetric_difference(&edges).next() {
            let detail = if golden.contains(&(a.clone(), b.clone())) {
                "edge in the fixture but not in Γ"
            } else {
                "edge in Γ but not in the fixture"
            };
            return Err(Witness::pair(a.clone(), b.clone(), detail).into());
        }
        ensure(!sub.is_complete(), || Witness::note("component of id is complete"))
    })
}

/// The three quandle axioms on a raw table.
pub fn check_quandle_axioms(label: &str, table: &[Vec<usize>]) -> Result<VerificationReport, VerifyError> {
    run(TheoremId::QuandleAxioms, label, || {
        let report = verify_quandle_axioms(table)?;
        match report.first_failure() {
            None => Ok(()),
            Some(w) => Err(Witness::note(w.to_string()).into()),
        }
    })
}

fn axioms_family_body(family: &QuandleFamily) -> Result<(), Stop> {
    for q in &family.quandles {
        if let Some(w) = q.axiom_report().first_failure() {
            return Err(Witness::note(format!("{}: {w}", q.label())).into());
        }
    }
    Ok(())
}

pub fn check_quandle_axioms_family(family: &QuandleFamily) -> Result<VerificationReport, VerifyError> {
    run(TheoremId::QuandleAxioms, family.label.clone(), || axioms_family_body(family))
}

fn right_translations_body(q: &Quandle) -> Result<(), Stop> {
    for r in q.right_translations() {
        ensure(r.is_automorphism_of(q), || {
            Witness::element(q.name(r.b), format!("{}: R_b is not an automorphism", q.label()))
        })?;
    }
    Ok(())
}

/// Every right translation `R_b(x) = x ▷ b` is a quandle automorphism.
pub fn check_right_translations(q: &Quandle) -> Result<VerificationReport, VerifyError> {
    run(TheoremId::RightTranslations, q.label(), || right_translations_body(q))
}

pub fn check_right_translations_family(family: &QuandleFamily) -> Result<VerificationReport, VerifyError> {
    run(TheoremId::RightTranslations, family.label.clone(), || {
        family.quandles.iter().try_for_each(right_translations_body)
    })
}

fn inner_orbits_body(q: &Quandle) -> Result<(), Stop> {
    let inn = q.inner_group()?;
    let graph = DirectedGraph::cayley(q);
    for x in 0..q.order() {
        let forward = q.forward_orbit(x)?;
        let orbit = inn.orbit(x);
        ensure(forward == orbit, || {
            Witness::sets(
                format!("{}: Inn-orbit of {}", q.label(), q.name(x)),
                named(q.names(), &orbit),
                named(q.names(), &forward),
            )
        })?;
        let reach = graph.reachable_from(x);
        ensure(forward == reach, || {
            Witness::sets(
                format!("{}: vertices reachable from {}", q.label(), q.name(x)),
                named(q.names(), &forward),
                named(q.names(), &reach),
            )
        })?;
    }
    Ok(())
}

/// Forward orbits equal `Inn(Q)`-orbits and the sets reachable in `Γ_Q`.
pub fn check_inner_orbits(q: &Quandle) -> Result<VerificationReport, VerifyError> {
    run(TheoremId::InnerOrbits, q.label(), || inner_orbits_body(q))
}

pub fn check_inner_orbits_family(family: &QuandleFamily) -> Result<VerificationReport, VerifyError> {
    run(TheoremId::InnerOrbits, family.label.clone(), || {
        family.quandles.iter().try_for_each(inner_orbits_body)
    })
}

fn fixed_point_body(g: &FiniteGroup, phi: &Automorphism) -> Result<(), Stop> {
    let q = Quandle::generalized_alexander(g, phi)?;
    for y in g.elements() {
        for z in g.elements() {
            let w = g.mul(y, g.inv(z));
            let fixed = phi.apply(w) == w;
            for x in g.elements() {
                let same = q.rhd(x, y) == q.rhd(x, z);
                ensure(same == fixed, || {
                    Witness::note(format!(
                        "φ={}: x={} y={} z={}: x▷y = x▷z is {same}, φ(yz⁻¹) = yz⁻¹ is {fixed}",
                        phi.label(),
                        g.name(x),
                        g.name(y),
                        g.name(z)
                    ))
                })?;
            }
        }
    }
    Ok(())
}

/// In `GAlex(G, φ)`: `x ▷ y = x ▷ z` iff `φ(yz⁻¹) = yz⁻¹`.
pub fn check_fixed_point_lemma(g: &FiniteGroup, phi: &Automorphism) -> Result<VerificationReport, VerifyError> {
    run(
        TheoremId::FixedPointLemma,
        format!("{} φ={}", g.label(), phi.label()),
        || fixed_point_body(g, phi),
    )
}

pub fn check_fixed_point_lemma_all(family: &AutomorphismFamily) -> Result<VerificationReport, VerifyError> {
    run(TheoremId::FixedPointLemma, family.label.clone(), || {
        family
            .automorphisms
            .iter()
            .try_for_each(|phi| fixed_point_body(&family.group, phi))
    })
}
