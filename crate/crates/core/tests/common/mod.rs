#![allow(dead_code)]

use std::sync::Arc;

use sstgroups_core::group::{build_from_spec, ActorImages, BuildConfig, GroupSpec};
use sstgroups_core::{ElementWord, GroupTable, SubgroupLattice};

pub fn w(s: &str) -> ElementWord {
    s.parse().unwrap()
}

pub fn acts(actor: &str, images: &[(&str, &str)]) -> ActorImages {
    ActorImages {
        actor_generator: actor.into(),
        images: images.iter().map(|(k, v)| (k.to_string(), w(v))).collect(),
    }
}

pub fn build(spec: &GroupSpec) -> GroupTable {
    build_from_spec(spec, &BuildConfig::default()).unwrap()
}

pub fn lattice(spec: &GroupSpec) -> SubgroupLattice {
    SubgroupLattice::new(Arc::new(build(spec))).unwrap()
}

pub fn klein_action_relations() -> Vec<ElementWord> {
    [
        "x^3", "y^3", "z^2", "w^2",
        "x^-1 y^-1 x y", "z^-1 w^-1 z w",
        "z^-1 x z x", "w^-1 y w y", "w^-1 x w x", "z^-1 y z y^-1 x^-1",
    ]
    .iter()
    .map(|s| w(s))
    .collect()
}

/// ⟨x,y,z,w | x³=y³=z²=w²=1, [x,y]=[z,w]=1, x^z=x⁻¹, y^w=y⁻¹, x^w=x⁻¹, y^z=xy⟩
pub fn c3sq_klein() -> GroupSpec {
    GroupSpec::semidirect(
        GroupSpec::direct(vec![GroupSpec::cyclic_labeled(3, "x"), GroupSpec::cyclic_labeled(3, "y")]),
        GroupSpec::direct(vec![GroupSpec::cyclic_labeled(2, "z"), GroupSpec::cyclic_labeled(2, "w")]),
        vec![
            acts("z", &[("x", "x^-1"), ("y", "x y")]),
            acts("w", &[("x", "x^-1"), ("y", "y^-1")]),
        ],
    )
    .named("C3^2:V4")
    .with_relations(klein_action_relations())
}

/// ⟨x,y | x⁵=y⁴=1, x^y=x²⟩
pub fn c5_c4() -> GroupSpec {
    GroupSpec::semidirect(
        GroupSpec::cyclic_labeled(5, "x"),
        GroupSpec::cyclic_labeled(4, "y"),
        vec![acts("y", &[("x", "x^2")])],
    )
    .named("C5:C4")
    .with_relations(vec![w("x^5"), w("y^4"), w("y^-1 x y x^-2")])
}

pub fn s3_xz() -> GroupSpec {
    GroupSpec::semidirect(
        GroupSpec::cyclic_labeled(3, "x"),
        GroupSpec::cyclic_labeled(2, "z"),
        vec![acts("z", &[("x", "x^-1")])],
    )
    .named("G1")
}

pub fn d10_yw() -> GroupSpec {
    GroupSpec::semidirect(
        GroupSpec::cyclic_labeled(5, "y"),
        GroupSpec::cyclic_labeled(2, "w"),
        vec![acts("w", &[("y", "y^-1")])],
    )
    .named("G2")
}

pub fn s3_x_d10() -> GroupSpec {
    GroupSpec::direct(vec![s3_xz(), d10_yw()])
        .named("S3xD10")
        .with_relations(
            ["x^3", "y^5", "z^2", "w^2", "x^-1 y^-1 x y", "x^-1 w^-1 x w", "z^-1 y^-1 z y",
             "z^-1 w^-1 z w", "z^-1 x z x", "w^-1 y w y"]
                .iter()
                .map(|s| w(s))
                .collect(),
        )
}

/// C3 ⋊ C4 with y inverting x.
pub fn dic3() -> GroupSpec {
    GroupSpec::semidirect(
        GroupSpec::cyclic_labeled(3, "x"),
        GroupSpec::cyclic_labeled(4, "y"),
        vec![acts("y", &[("x", "x^-1")])],
    )
    .named("C3:C4")
}

pub fn c7_c3() -> GroupSpec {
    GroupSpec::semidirect(
        GroupSpec::cyclic_labeled(7, "x"),
        GroupSpec::cyclic_labeled(3, "y"),
        vec![acts("y", &[("x", "x^2")])],
    )
    .named("C7:C3")
}

/// Q8 as the regular permutation representation, generators i and j.
pub fn q8() -> GroupSpec {
    // elements 0..8 = 1, i, j, k, -1, -i, -j, -k; right multiplication
    let i = vec![1, 4, 7, 2, 5, 0, 3, 6];
    let j = vec![2, 3, 4, 5, 6, 7, 0, 1];
    GroupSpec::permutation(8, vec![("i".into(), i), ("j".into(), j)]).named("Q8")
}

pub fn a5_points() -> GroupSpec {
    // u = (0 1 2), v = (1 2 3), t = (2 3 4)
    GroupSpec::permutation(
        5,
        vec![
            ("u".into(), vec![1, 2, 0, 3, 4]),
            ("v".into(), vec![0, 2, 3, 1, 4]),
            ("t".into(), vec![0, 1, 3, 4, 2]),
        ],
    )
    .named("A5")
}

pub fn gen(g: &GroupTable, label: &str) -> usize {
    g.generator(label).unwrap()
}

pub fn words_to_elems(g: &GroupTable, words: &[&str]) -> Vec<usize> {
    words.iter().map(|s| w(s).evaluate(g).unwrap()).collect()
}
