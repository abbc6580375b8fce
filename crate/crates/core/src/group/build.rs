use std::collections::HashMap;

use super::spec::{
    alternating_generators, direct_labels, symmetric_generators, GroupSpec, SpecNode,
};
use super::table::{AssociativityCheck, Elem, GroupTable};
use super::word::ElementWord;
use crate::bitset::BitSet;
use crate::error::{GroupError, Result};

pub const DEFAULT_ORDER_CAP: usize = 360;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BuildConfig {
    pub order_cap: usize,
    pub associativity: AssociativityCheck,
}

impl Default for BuildConfig {
    fn default() -> Self {
        Self {
            order_cap: DEFAULT_ORDER_CAP,
            associativity: AssociativityCheck::default(),
        }
    }
}

impl BuildConfig {
    pub fn with_cap(order_cap: usize) -> Self {
        Self {
            order_cap,
            ..Self::default()
        }
    }

    fn check_cap(&self, order: usize) -> Result<()> {
        if order > self.order_cap {
            Err(GroupError::OrderCapExceeded {
                order,
                cap: self.order_cap,
            })
        } else {
            Ok(())
        }
    }
}

/// Builds and certifies the group described by `spec`.
pub fn build_from_spec(spec: &GroupSpec, config: &BuildConfig) -> Result<GroupTable> {
    let table = match &spec.node {
        SpecNode::Cyclic { n, .. } => cyclic(*n, spec, config)?,
        SpecNode::Dihedral { n, .. } => dihedral(*n, spec, config)?,
        SpecNode::Symmetric { n, .. } => {
            let [a, b] = symmetric_generators(*n);
            let labels = spec.generator_labels()?;
            permutation_group(*n, &[(labels[0].clone(), a), (labels[1].clone(), b)], config)?
        }
        SpecNode::Alternating { n, .. } => {
            let [a, b] = alternating_generators(*n);
            let labels = spec.generator_labels()?;
            permutation_group(*n, &[(labels[0].clone(), a), (labels[1].clone(), b)], config)?
        }
        SpecNode::Permutation { degree, generators } => {
            permutation_group(*degree, generators, config)?
        }
        SpecNode::Direct(factors) => {
            if factors.is_empty() {
                return Err(GroupError::InvalidSpec("direct product of nothing".into()));
            }
            let built: Vec<GroupTable> = factors
                .iter()
                .map(|f| build_from_spec(f, config))
                .collect::<Result<_>>()?;
            let mut acc = built[0].clone();
            for f in &built[1..] {
                acc = product_table(&acc, f, config)?;
            }
            let per: Vec<Vec<String>> = built
                .iter()
                .map(|t| t.labels().iter().map(|(l, _)| l.clone()).collect())
                .collect();
            let names = direct_labels(&per);
            let elems: Vec<Elem> = embedded_generators(&built);
            acc.with_labels(names.into_iter().zip(elems).collect())
        }
        SpecNode::Semidirect {
            kernel,
            actor,
            action,
        } => {
            let k = build_from_spec(kernel, config)?;
            let a = build_from_spec(actor, config)?;
            semidirect(&k, &a, action, config)?
        }
    };
    let table = table.with_name(spec.display_name());
    for rel in &spec.relations {
        if rel.evaluate(&table)? != table.identity() {
            return Err(GroupError::RelationViolated(rel.to_string()));
        }
    }
    Ok(table)
}

fn cyclic(n: usize, spec: &GroupSpec, config: &BuildConfig) -> Result<GroupTable> {
    if n == 0 {
        return Err(GroupError::InvalidSpec("cyclic(0)".into()));
    }
    config.check_cap(n)?;
    let mult = (0..n * n).map(|i| ((i / n + i % n) % n) as u32).collect();
    let label = spec.generator_labels()?.remove(0);
    GroupTable::from_flat(
        String::new(),
        n,
        mult,
        vec![(label, 1 % n)],
        config.associativity,
    )
}

fn dihedral(n: usize, spec: &GroupSpec, config: &BuildConfig) -> Result<GroupTable> {
    if n == 0 {
        return Err(GroupError::InvalidSpec("dihedral(0)".into()));
    }
    let order = 2 * n;
    config.check_cap(order)?;
    // id = i + n*j  <->  r^i s^j
    let mut mult = Vec::with_capacity(order * order);
    for x in 0..order {
        let (i, a) = (x % n, x / n);
        for y in 0..order {
            let (k, b) = (y % n, y / n);
            let rot = if a == 0 { (i + k) % n } else { (i + n - k) % n };
            mult.push((rot + n * ((a + b) % 2)) as u32);
        }
    }
    let labels = spec.generator_labels()?;
    GroupTable::from_flat(
        String::new(),
        order,
        mult,
        vec![(labels[0].clone(), 1 % n), (labels[1].clone(), n)],
        config.associativity,
    )
}

/// Closure of image-array permutations; elements numbered in breadth-first
/// discovery order from the identity. Products compose left to right:
/// `(pq)(i) = q(p(i))`.
fn permutation_group(
    degree: usize,
    generators: &[(String, Vec<usize>)],
    config: &BuildConfig,
) -> Result<GroupTable> {
    for (label, images) in generators {
        let mut seen = BitSet::new(degree.max(1));
        if images.len() != degree
            || images.iter().any(|&i| i >= degree || !seen.insert(i))
        {
            return Err(GroupError::InvalidSpec(format!(
                "generator `{label}` is not a permutation of 0..{degree}"
            )));
        }
    }
    let compose = |p: &[usize], q: &[usize]| -> Vec<usize> { p.iter().map(|&i| q[i]).collect() };
    let identity: Vec<usize> = (0..degree).collect();
    let mut elems: Vec<Vec<usize>> = vec![identity.clone()];
    let mut index: HashMap<Vec<usize>, usize> = HashMap::from([(identity, 0)]);
    let mut head = 0;
    while head < elems.len() {
        for (_, g) in generators {
            let next = compose(&elems[head], g);
            if !index.contains_key(&next) {
                index.insert(next.clone(), elems.len());
                elems.push(next);
                config.check_cap(elems.len())?;
            }
        }
        head += 1;
    }
    let order = elems.len();
    let mut mult = Vec::with_capacity(order * order);
    for p in &elems {
        for q in &elems {
            mult.push(index[&compose(p, q)] as u32);
        }
    }
    let labels = generators
        .iter()
        .map(|(l, g)| (l.clone(), index[g]))
        .collect();
    GroupTable::from_flat(String::new(), order, mult, labels, config.associativity)
}

/// `(a, b) -> a_id * |B| + b_id`, componentwise multiplication.
fn product_table(a: &GroupTable, b: &GroupTable, config: &BuildConfig) -> Result<GroupTable> {
    let (na, nb) = (a.order(), b.order());
    let order = na * nb;
    config.check_cap(order)?;
    let mut mult = Vec::with_capacity(order * order);
    for x in 0..order {
        let (xa, xb) = (x / nb, x % nb);
        for y in 0..order {
            let (ya, yb) = (y / nb, y % nb);
            mult.push((a.mul(xa, ya) * nb + b.mul(xb, yb)) as u32);
        }
    }
    GroupTable::from_flat(String::new(), order, mult, vec![], config.associativity)
}

fn embedded_generators(factors: &[GroupTable]) -> Vec<Elem> {
    let mut out = Vec::new();
    for (i, f) in factors.iter().enumerate() {
        let stride: usize = factors[i + 1..].iter().map(|t| t.order()).product();
        out.extend(f.labels().iter().map(|(_, e)| e * stride));
    }
    out
}

/// Direct product; labels follow the same collision rule as `direct` specs.
pub fn direct_product(a: &GroupTable, b: &GroupTable, config: &BuildConfig) -> Result<GroupTable> {
    let table = product_table(a, b, config)?;
    let per = [a, b].map(|t| t.labels().iter().map(|(l, _)| l.clone()).collect::<Vec<_>>());
    let names = direct_labels(&per);
    let elems = embedded_generators(&[a.clone(), b.clone()]);
    Ok(table
        .with_labels(names.into_iter().zip(elems).collect())
        .with_name(format!("{} x {}", a.name(), b.name())))
}

/// Extends generator images to a map on the whole of `g` along a
/// breadth-first spanning tree. Returns `None` if some generator label is
/// missing from `images`.
fn extend_on_generators(
    g: &GroupTable,
    image_of_generator: &[Elem],
    target_mul: impl Fn(Elem, Elem) -> Elem,
    target_identity: Elem,
) -> Vec<Elem> {
    let gens: Vec<Elem> = g.labels().iter().map(|(_, e)| *e).collect();
    let mut map = vec![usize::MAX; g.order()];
    map[0] = target_identity;
    let mut queue = vec![0];
    let mut head = 0;
    while head < queue.len() {
        let x = queue[head];
        head += 1;
        for (gi, &s) in gens.iter().enumerate() {
            let y = g.mul(x, s);
            if map[y] == usize::MAX {
                map[y] = target_mul(map[x], image_of_generator[gi]);
                queue.push(y);
            }
        }
    }
    map
}

fn semidirect(
    kernel: &GroupTable,
    actor: &GroupTable,
    action: &[crate::group::spec::ActorImages],
    config: &BuildConfig,
) -> Result<GroupTable> {
    let (nk, na) = (kernel.order(), actor.order());
    let order = nk * na;
    config.check_cap(order)?;
    let bad = |msg: String| GroupError::InvalidAction(msg);

    // One automorphism (as an element permutation of the kernel) per actor generator.
    let mut generator_autos: Vec<Vec<Elem>> = Vec::new();
    for (alabel, _) in actor.labels() {
        let Some(entry) = action.iter().find(|a| &a.actor_generator == alabel) else {
            // Unlisted actor generators act trivially.
            generator_autos.push((0..nk).collect());
            continue;
        };
        let mut images = Vec::new();
        for (klabel, _) in kernel.labels() {
            let word = entry
                .images
                .iter()
                .find(|(l, _)| l == klabel)
                .map(|(_, w)| w.clone())
                .unwrap_or_else(|| ElementWord::new(vec![(klabel.clone(), 1)]));
            images.push(word.evaluate(kernel).map_err(|e| bad(e.to_string()))?);
        }
        let map = extend_on_generators(kernel, &images, |x, y| kernel.mul(x, y), 0);
        if map.contains(&usize::MAX) {
            return Err(bad("kernel generators do not generate the kernel".into()));
        }
        let mut seen = BitSet::new(nk);
        if !map.iter().all(|&x| seen.insert(x)) {
            return Err(bad(format!("action of `{alabel}` is not bijective")));
        }
        for x in 0..nk {
            for y in 0..nk {
                if map[kernel.mul(x, y)] != kernel.mul(map[x], map[y]) {
                    return Err(bad(format!(
                        "action of `{alabel}` does not preserve multiplication"
                    )));
                }
            }
        }
        generator_autos.push(map);
    }
    for (label, _) in action.iter().map(|a| (&a.actor_generator, ())) {
        if actor.generator(label).is_none() {
            return Err(bad(format!("`{label}` is not an actor generator")));
        }
    }

    // Right action: k^(ab) = (k^a)^b, stored as an index into `autos`.
    let mut autos: Vec<Vec<Elem>> = vec![(0..nk).collect()];
    let mut auto_index: HashMap<Vec<Elem>, usize> = HashMap::from([((0..nk).collect(), 0)]);
    let gen_ids: Vec<usize> = generator_autos
        .iter()
        .map(|m| {
            *auto_index.entry(m.clone()).or_insert_with(|| {
                autos.push(m.clone());
                autos.len() - 1
            })
        })
        .collect();
    let compose_right = |autos: &mut Vec<Vec<Elem>>,
                         index: &mut HashMap<Vec<Elem>, usize>,
                         first: usize,
                         then: usize|
     -> usize {
        let m: Vec<Elem> = autos[first].iter().map(|&k| autos[then][k]).collect();
        *index.entry(m.clone()).or_insert_with(|| {
            autos.push(m);
            autos.len() - 1
        })
    };
    let mut theta = vec![usize::MAX; na];
    theta[0] = 0;
    let actor_gens: Vec<Elem> = actor.labels().iter().map(|(_, e)| *e).collect();
    let mut queue = vec![0];
    let mut head = 0;
    while head < queue.len() {
        let x = queue[head];
        head += 1;
        for (gi, &s) in actor_gens.iter().enumerate() {
            let y = actor.mul(x, s);
            if theta[y] == usize::MAX {
                theta[y] = compose_right(&mut autos, &mut auto_index, theta[x], gen_ids[gi]);
                queue.push(y);
            }
        }
    }
    if theta.contains(&usize::MAX) {
        return Err(bad("actor generators do not generate the actor".into()));
    }
    for a in 0..na {
        for b in 0..na {
            let ab = theta[actor.mul(a, b)];
            let expected = &autos[ab];
            if !(0..nk).all(|k| expected[k] == autos[theta[b]][autos[theta[a]][k]]) {
                return Err(bad("actor -> Aut(kernel) is not a homomorphism".into()));
            }
        }
    }

    // id = a * |K| + k  <->  k·a ;  (k1 a1)(k2 a2) = k1 · k2^(a1⁻¹) · a1 a2
    let mut mult = Vec::with_capacity(order * order);
    for x in 0..order {
        let (xa, xk) = (x / nk, x % nk);
        let act = &autos[theta[actor.inv(xa)]];
        for y in 0..order {
            let (ya, yk) = (y / nk, y % nk);
            let k = kernel.mul(xk, act[yk]);
            let a = actor.mul(xa, ya);
            mult.push((a * nk + k) as u32);
        }
    }
    let labels = kernel
        .labels()
        .iter()
        .map(|(l, e)| (l.clone(), *e))
        .chain(actor.labels().iter().map(|(l, e)| (l.clone(), e * nk)))
        .collect();
    GroupTable::from_flat(String::new(), order, mult, labels, config.associativity)
}

/// Quotient `g / n`. Coset ids are assigned in increasing order of each
/// coset's least element, so the identity coset is `0`. Returns the table and
/// the projection `element -> coset id`.
pub fn quotient(g: &GroupTable, n: &BitSet) -> Result<(GroupTable, Vec<Elem>)> {
    if !n.contains(0) || !crate::subgroups::is_subgroup_set(g, n) {
        return Err(GroupError::NotASubgroup);
    }
    for x in n {
        for y in g.elements() {
            if !n.contains(g.conj(x, y)) {
                return Err(GroupError::NotNormal);
            }
        }
    }
    let mut proj = vec![usize::MAX; g.order()];
    let mut reps = Vec::new();
    for x in g.elements() {
        if proj[x] != usize::MAX {
            continue;
        }
        let id = reps.len();
        reps.push(x);
        for m in n {
            proj[g.mul(x, m)] = id;
        }
    }
    let q = reps.len();
    let mut mult = Vec::with_capacity(q * q);
    for &a in &reps {
        for &b in &reps {
            mult.push(proj[g.mul(a, b)] as u32);
        }
    }
    let labels = g
        .labels()
        .iter()
        .map(|(l, e)| (l.clone(), proj[*e]))
        .collect();
    let table = GroupTable::from_flat(
        format!("{}/N{}", g.name(), n.len()),
        q,
        mult,
        labels,
        AssociativityCheck::default(),
    )?;
    Ok((table, proj))
}

/// The subgroup `h` as a group in its own right. Elements keep their
/// relative order, so the embedding is increasing and `0 -> 0`. Parent
/// labels that land in `h` are kept.
pub fn induced_table(g: &GroupTable, h: &BitSet) -> Result<(GroupTable, Vec<Elem>)> {
    if !crate::subgroups::is_subgroup_set(g, h) {
        return Err(GroupError::NotASubgroup);
    }
    let embed: Vec<Elem> = h.to_vec();
    let mut local = vec![usize::MAX; g.order()];
    for (i, &e) in embed.iter().enumerate() {
        local[e] = i;
    }
    let m = embed.len();
    let mut mult = Vec::with_capacity(m * m);
    for &a in &embed {
        for &b in &embed {
            mult.push(local[g.mul(a, b)] as u32);
        }
    }
    let labels = g
        .labels()
        .iter()
        .filter(|(_, e)| h.contains(*e))
        .map(|(l, e)| (l.clone(), local[*e]))
        .collect();
    let table = GroupTable::from_flat(
        format!("{}<{}>", g.name(), m),
        m,
        mult,
        labels,
        AssociativityCheck::default(),
    )?;
    Ok((table, embed))
}
