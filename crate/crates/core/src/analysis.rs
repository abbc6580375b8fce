//! Per-group cache: the subgroup lattice, memoised predicate verdicts, class
//! verdicts and analyses of quotient groups.

use std::sync::{Arc, OnceLock};

use crate::bitset::BitSet;
use crate::classes::{self, ClassId, ClassVerdict, Via};
use crate::error::{GroupError, Result};
use crate::group::{quotient, Elem, GroupTable};
use crate::lattice::{SubgroupId, SubgroupLattice};
use crate::permutability::{PredicateCache, PredicateId, PredicateVerdict};
use crate::series;

pub struct GroupAnalysis {
    cache: PredicateCache,
    cap: usize,
    solvable: OnceLock<bool>,
    residual: OnceLock<SubgroupId>,
    classes: Vec<OnceLock<ClassVerdict>>,
    quotients: Vec<OnceLock<Arc<QuotientAnalysis>>>,
}

/// `G/N` together with the projection `G → G/N` on element ids.
pub struct QuotientAnalysis {
    pub normal: SubgroupId,
    pub analysis: GroupAnalysis,
    pub projection: Vec<Elem>,
}

impl std::fmt::Debug for GroupAnalysis {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("GroupAnalysis").field("lattice", self.lattice()).finish()
    }
}

impl GroupAnalysis {
    pub fn new(g: Arc<GroupTable>, cap: usize) -> Result<Self> {
        Ok(Self::from_lattice(Arc::new(SubgroupLattice::with_cap(g, cap)?), cap))
    }

    pub fn from_lattice(lattice: Arc<SubgroupLattice>, cap: usize) -> Self {
        let n = lattice.len();
        GroupAnalysis {
            cache: PredicateCache::new(lattice),
            cap,
            solvable: OnceLock::new(),
            residual: OnceLock::new(),
            classes: (0..ClassId::ALL.len() * 2).map(|_| OnceLock::new()).collect(),
            quotients: (0..n).map(|_| OnceLock::new()).collect(),
        }
    }

    pub fn lattice(&self) -> &SubgroupLattice {
        self.cache.lattice()
    }

    pub fn lattice_arc(&self) -> &Arc<SubgroupLattice> {
        self.cache.lattice_arc()
    }

    pub fn group(&self) -> &GroupTable {
        self.lattice().group()
    }

    pub fn cache(&self) -> &PredicateCache {
        &self.cache
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn verdict(&self, pred: PredicateId, a: SubgroupId, h: SubgroupId) -> PredicateVerdict {
        self.cache.verdict(pred, a, h)
    }

    pub fn holds(&self, pred: PredicateId, a: SubgroupId, h: SubgroupId) -> bool {
        self.cache.holds(pred, a, h)
    }

    /// Verdict in the whole group.
    pub fn in_group(&self, pred: PredicateId, h: SubgroupId) -> PredicateVerdict {
        self.cache.in_group(pred, h)
    }

    pub fn holds_in_group(&self, pred: PredicateId, h: SubgroupId) -> bool {
        self.in_group(pred, h).verdict
    }

    pub fn is_solvable(&self) -> bool {
        *self.solvable.get_or_init(|| series::is_solvable(self.group()))
    }

    pub fn nilpotent_residual(&self) -> SubgroupId {
        *self.residual.get_or_init(|| {
            let l = self.lattice();
            l.id_of(&series::nilpotent_residual(l.group())).expect("residual is a subgroup")
        })
    }

    pub fn class_verdict(&self, class: ClassId, via: Via) -> ClassVerdict {
        let slot = class.index() * 2 + via as usize;
        self.classes[slot].get_or_init(|| classes::evaluate_class(self, class, via)).clone()
    }

    /// The class verdict a report shows: the brute-force one when it exists,
    /// otherwise the only available route.
    pub fn class_holds(&self, class: ClassId) -> bool {
        self.class_verdict(class, Via::Bruteforce).verdict.is_true()
    }

    pub fn quotient(&self, n: SubgroupId) -> Result<Arc<QuotientAnalysis>> {
        if !self.lattice().is_normal(n) {
            return Err(GroupError::NotNormal);
        }
        if let Some(q) = self.quotients[n].get() {
            return Ok(q.clone());
        }
        let (table, projection) = quotient(self.group(), self.lattice().set(n))?;
        let analysis = GroupAnalysis::new(Arc::new(table), self.cap)?;
        let built = Arc::new(QuotientAnalysis { normal: n, analysis, projection });
        Ok(self.quotients[n].get_or_init(|| built).clone())
    }
}

impl QuotientAnalysis {
    /// Id of `HN/N` in the quotient lattice.
    pub fn image(&self, parent: &GroupAnalysis, h: SubgroupId) -> SubgroupId {
        let q = self.analysis.lattice();
        let set = BitSet::from_iter_in(
            q.group().order(),
            parent.lattice().set(h).iter().map(|e| self.projection[e]),
        );
        q.id_of(&set).expect("homomorphic image of a subgroup")
    }

    /// Id of the full preimage of a subgroup of `G/N`.
    pub fn preimage(&self, parent: &GroupAnalysis, s: SubgroupId) -> SubgroupId {
        let target = self.analysis.lattice().set(s);
        let g = parent.group();
        let set = BitSet::from_iter_in(g.order(), g.elements().filter(|&e| target.contains(self.projection[e])));
        parent.lattice().id_of(&set).expect("preimage of a subgroup")
    }
}
