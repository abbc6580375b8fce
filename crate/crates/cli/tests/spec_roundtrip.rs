use proptest::prelude::*;
use sstgroups_cli::{parse_group_spec, serialize_group_spec};
use sstgroups_core::group::{ActorImages, SpecNode};
use sstgroups_core::{ElementWord, GroupSpec};

fn word(label: &str, e: i32) -> ElementWord {
    format!("{label}^{e}").parse().unwrap()
}

fn leaf() -> impl Strategy<Value = GroupSpec> {
    (0usize..4, 1usize..9, any::<bool>()).prop_map(|(kind, n, named)| {
        let node = match kind {
            0 => SpecNode::Cyclic { n, labels: Vec::new() },
            1 => SpecNode::Dihedral { n, labels: Vec::new() },
            2 => SpecNode::Symmetric { n, labels: Vec::new() },
            _ => SpecNode::Alternating { n, labels: Vec::new() },
        };
        GroupSpec { name: named.then(|| format!("L{n}")), node, relations: Vec::new() }
    })
}

fn permutation() -> impl Strategy<Value = GroupSpec> {
    (1usize..7).prop_flat_map(|degree| {
        prop::collection::vec(Just((0..degree).collect::<Vec<_>>()).prop_shuffle(), 1..3).prop_map(move |perms| {
            let generators = perms.into_iter().enumerate().map(|(i, p)| (format!("p{i}"), p)).collect();
            GroupSpec { name: None, node: SpecNode::Permutation { degree, generators }, relations: Vec::new() }
        })
    })
}

fn semidirect() -> impl Strategy<Value = GroupSpec> {
    (1usize..9, 1usize..5, -3i32..4, prop::collection::vec(-4i32..5, 0..3)).prop_map(|(n, m, e, rels)| {
        let kernel = GroupSpec { name: None, node: SpecNode::Cyclic { n, labels: vec!["k".into()] }, relations: Vec::new() };
        let actor = GroupSpec { name: None, node: SpecNode::Cyclic { n: m, labels: vec!["a".into()] }, relations: Vec::new() };
        let action = vec![ActorImages { actor_generator: "a".into(), images: vec![("k".into(), word("k", e))] }];
        GroupSpec {
            name: Some("sd".into()),
            node: SpecNode::Semidirect { kernel: Box::new(kernel), actor: Box::new(actor), action },
            relations: rels.into_iter().map(|r| word("a", r)).collect(),
        }
    })
}

fn spec() -> impl Strategy<Value = GroupSpec> {
    let base = prop_oneof![leaf(), permutation(), semidirect()];
    base.prop_recursive(2, 8, 3, |inner| {
        prop::collection::vec(inner, 1..4).prop_map(|factors| GroupSpec { name: None, node: SpecNode::Direct(factors), relations: Vec::new() })
    })
}

proptest! {
    #[test]
    fn parse_inverts_serialize(s in spec()) {
        let text = serialize_group_spec(&s);
        prop_assert_eq!(parse_group_spec(&text).unwrap(), s);
    }
}
