//! Finite generating sets of commutative subalgebras with declared degrees.

use rayon::prelude::*;

use crate::pbw::{Element, Kind};
use crate::scalar::Ring;

#[derive(Clone, Debug, PartialEq)]
pub struct Generator<K: Kind, R: Ring> {
    pub element: Element<K, R>,
    /// Filtration degree the generator is counted with; the element's actual
    /// degree never exceeds it.
    pub degree: usize,
    pub name: String,
}

/// Hypothesis flags recorded at construction; a failed hypothesis does not
/// stop the construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Flags {
    pub regular: bool,
    pub nondegenerate: bool,
}

impl Default for Flags {
    fn default() -> Self {
        Flags { regular: true, nondegenerate: true }
    }
}

#[derive(Clone, Debug)]
pub struct Presentation<K: Kind, R: Ring> {
    pub rank: usize,
    pub label: String,
    pub generators: Vec<Generator<K, R>>,
    pub flags: Flags,
}

impl<K: Kind, R: Ring> Presentation<K, R> {
    pub fn new(rank: usize, label: impl Into<String>) -> Self {
        Presentation { rank, label: label.into(), generators: Vec::new(), flags: Flags::default() }
    }

    /// Adds a generator unless it is a scalar (constants are always present).
    pub fn push(&mut self, element: Element<K, R>, degree: usize, name: impl Into<String>) {
        if element.degree() == 0 {
            return;
        }
        debug_assert!(element.degree() <= degree, "generator exceeds its declared degree");
        self.generators.push(Generator { element, degree, name: name.into() });
    }

    pub fn extend(&mut self, other: &Presentation<K, R>) {
        self.generators.extend(other.generators.iter().cloned());
        self.flags.regular &= other.flags.regular;
        self.flags.nondegenerate &= other.flags.nondegenerate;
    }

    pub fn max_degree(&self) -> usize {
        self.generators.iter().map(|g| g.degree).max().unwrap_or(0)
    }

    /// Keeps generators of declared degree at most `d`.
    pub fn truncate(&self, d: usize) -> Self {
        Presentation {
            rank: self.rank,
            label: self.label.clone(),
            generators: self.generators.iter().filter(|g| g.degree <= d).cloned().collect(),
            flags: self.flags,
        }
    }

    pub fn map<K2: Kind, S: Ring>(
        &self,
        rank: usize,
        f: impl Fn(&Element<K, R>) -> Element<K2, S> + Sync,
    ) -> Presentation<K2, S>
    where
        K: Sync,
    {
        let generators = self
            .generators
            .par_iter()
            .map(|g| Generator { element: f(&g.element), degree: g.degree, name: g.name.clone() })
            .collect();
        Presentation { rank, label: self.label.clone(), generators, flags: self.flags }
    }

    /// All pairwise commutators, computed exactly.
    pub fn commutativity_check(&self) -> CommutativityReport<K, R> {
        let m = self.generators.len();
        let pairs: Vec<(usize, usize)> = (0..m).flat_map(|i| (i + 1..m).map(move |j| (i, j))).collect();
        let nonzero: Vec<_> = pairs
            .par_iter()
            .filter_map(|&(i, j)| {
                let c = self.generators[i].element.commutator(&self.generators[j].element);
                (!c.is_zero()).then_some((i, j, c))
            })
            .collect();
        CommutativityReport { pairs_checked: pairs.len(), nonzero }
    }
}

#[derive(Clone, Debug)]
pub struct CommutativityReport<K: Kind, R: Ring> {
    pub pairs_checked: usize,
    /// Generator index pairs with their nonzero commutator.
    pub nonzero: Vec<(usize, usize, Element<K, R>)>,
}

impl<K: Kind, R: Ring> CommutativityReport<K, R> {
    pub fn passed(&self) -> bool {
        self.nonzero.is_empty()
    }
}
