use super::word::ElementWord;
use crate::error::{GroupError, Result};

/// Construction tree for a concrete finite group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupSpec {
    pub name: Option<String>,
    pub node: SpecNode,
    /// Words that must evaluate to the identity in the constructed group.
    pub relations: Vec<ElementWord>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SpecNode {
    /// `labels` overrides the default generator name `a`.
    Cyclic { n: usize, labels: Vec<String> },
    /// Dihedral group of order `2n`, generators `r` (rotation) and `s`.
    Dihedral { n: usize, labels: Vec<String> },
    /// Generated by the `n`-cycle `a` and the transposition `b = (0 1)`.
    Symmetric { n: usize, labels: Vec<String> },
    /// Generated by 3-cycles `a` and `b`; see [`alternating_generators`].
    Alternating { n: usize, labels: Vec<String> },
    Direct(Vec<GroupSpec>),
    Semidirect {
        kernel: Box<GroupSpec>,
        actor: Box<GroupSpec>,
        action: Vec<ActorImages>,
    },
    Permutation {
        degree: usize,
        generators: Vec<(String, Vec<usize>)>,
    },
}

/// Images `k^a` of every kernel generator `k` under conjugation by the actor
/// generator `a`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ActorImages {
    pub actor_generator: String,
    pub images: Vec<(String, ElementWord)>,
}

impl GroupSpec {
    pub fn new(node: SpecNode) -> Self {
        Self {
            name: None,
            node,
            relations: Vec::new(),
        }
    }

    pub fn named(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn with_relations(mut self, relations: Vec<ElementWord>) -> Self {
        self.relations = relations;
        self
    }

    pub fn cyclic(n: usize) -> Self {
        Self::new(SpecNode::Cyclic { n, labels: vec![] })
    }

    pub fn cyclic_labeled(n: usize, label: &str) -> Self {
        Self::new(SpecNode::Cyclic {
            n,
            labels: vec![label.to_string()],
        })
    }

    pub fn dihedral(n: usize) -> Self {
        Self::new(SpecNode::Dihedral { n, labels: vec![] })
    }

    pub fn symmetric(n: usize) -> Self {
        Self::new(SpecNode::Symmetric { n, labels: vec![] })
    }

    pub fn alternating(n: usize) -> Self {
        Self::new(SpecNode::Alternating { n, labels: vec![] })
    }

    pub fn direct(factors: Vec<GroupSpec>) -> Self {
        Self::new(SpecNode::Direct(factors))
    }

    pub fn semidirect(kernel: GroupSpec, actor: GroupSpec, action: Vec<ActorImages>) -> Self {
        Self::new(SpecNode::Semidirect {
            kernel: Box::new(kernel),
            actor: Box::new(actor),
            action,
        })
    }

    pub fn permutation(degree: usize, generators: Vec<(String, Vec<usize>)>) -> Self {
        Self::new(SpecNode::Permutation { degree, generators })
    }

    pub fn kind(&self) -> &'static str {
        match &self.node {
            SpecNode::Cyclic { .. } => "cyclic",
            SpecNode::Dihedral { .. } => "dihedral",
            SpecNode::Symmetric { .. } => "symmetric",
            SpecNode::Alternating { .. } => "alternating",
            SpecNode::Direct(_) => "direct",
            SpecNode::Semidirect { .. } => "semidirect",
            SpecNode::Permutation { .. } => "permutation",
        }
    }

    /// A readable default name, e.g. `C5`, `D10`, `S3 x C35`.
    pub fn display_name(&self) -> String {
        if let Some(name) = &self.name {
            return name.clone();
        }
        match &self.node {
            SpecNode::Cyclic { n, .. } => format!("C{n}"),
            SpecNode::Dihedral { n, .. } => format!("D{}", 2 * n),
            SpecNode::Symmetric { n, .. } => format!("S{n}"),
            SpecNode::Alternating { n, .. } => format!("A{n}"),
            SpecNode::Direct(fs) => fs
                .iter()
                .map(|f| f.display_name())
                .collect::<Vec<_>>()
                .join(" x "),
            SpecNode::Semidirect { kernel, actor, .. } => {
                format!("{} : {}", kernel.display_name(), actor.display_name())
            }
            SpecNode::Permutation { degree, .. } => format!("Perm({degree})"),
        }
    }

    /// Generator labels of the group this spec builds, in table order.
    /// Does not build the group.
    pub fn generator_labels(&self) -> Result<Vec<String>> {
        let fixed = |labels: &Vec<String>, defaults: &[&str], kind: &str| -> Result<Vec<String>> {
            if labels.is_empty() {
                Ok(defaults.iter().map(|s| s.to_string()).collect())
            } else if labels.len() == defaults.len() {
                Ok(labels.clone())
            } else {
                Err(GroupError::InvalidSpec(format!(
                    "{kind} takes {} labels, got {}",
                    defaults.len(),
                    labels.len()
                )))
            }
        };
        match &self.node {
            SpecNode::Cyclic { labels, .. } => fixed(labels, &["a"], "cyclic"),
            SpecNode::Dihedral { labels, .. } => fixed(labels, &["r", "s"], "dihedral"),
            SpecNode::Symmetric { labels, .. } => fixed(labels, &["a", "b"], "symmetric"),
            SpecNode::Alternating { labels, .. } => fixed(labels, &["a", "b"], "alternating"),
            SpecNode::Direct(factors) => {
                let per: Vec<Vec<String>> = factors
                    .iter()
                    .map(|f| f.generator_labels())
                    .collect::<Result<_>>()?;
                Ok(direct_labels(&per))
            }
            SpecNode::Semidirect { kernel, actor, .. } => {
                let mut labels = kernel.generator_labels()?;
                for l in actor.generator_labels()? {
                    if labels.contains(&l) {
                        return Err(GroupError::InvalidSpec(format!(
                            "semidirect kernel and actor share the label `{l}`"
                        )));
                    }
                    labels.push(l);
                }
                Ok(labels)
            }
            SpecNode::Permutation { generators, .. } => {
                Ok(generators.iter().map(|(l, _)| l.clone()).collect())
            }
        }
    }
}

/// Direct products keep factor labels unless two factors share one; then
/// every label is prefixed with its 1-based factor position (`2.a`).
pub(crate) fn direct_labels(per_factor: &[Vec<String>]) -> Vec<String> {
    let mut all: Vec<&String> = per_factor.iter().flatten().collect();
    all.sort();
    let collide = all.windows(2).any(|w| w[0] == w[1]);
    per_factor
        .iter()
        .enumerate()
        .flat_map(|(i, ls)| {
            ls.iter().map(move |l| {
                if collide {
                    format!("{}.{l}", i + 1)
                } else {
                    l.clone()
                }
            })
        })
        .collect()
}

/// Standard generating 3-cycles of `A_n` on points `0..n` (0-based images).
pub fn alternating_generators(n: usize) -> [Vec<usize>; 2] {
    let id: Vec<usize> = (0..n).collect();
    if n < 3 {
        return [id.clone(), id];
    }
    // a = (0 1 2), b = (0 1 ... n-1) for odd n, (1 2 ... n-1) for even n
    let mut a = id.clone();
    a[0] = 1;
    a[1] = 2;
    a[2] = 0;
    let mut b = id;
    if n % 2 == 1 {
        for (i, img) in b.iter_mut().enumerate() {
            *img = (i + 1) % n;
        }
    } else {
        for (i, img) in b.iter_mut().enumerate().skip(1) {
            *img = if i + 1 == n { 1 } else { i + 1 };
        }
    }
    [a, b]
}

/// `a` = the n-cycle, `b` = (0 1).
pub fn symmetric_generators(n: usize) -> [Vec<usize>; 2] {
    let cycle: Vec<usize> = (0..n).map(|i| (i + 1) % n.max(1)).collect();
    let mut transposition: Vec<usize> = (0..n).collect();
    if n >= 2 {
        transposition.swap(0, 1);
    }
    [cycle, transposition]
}
