use std::collections::VecDeque;

use super::domain::Domain;
use super::ColoringRules;
use crate::algebra::Element;
use crate::diagram::SingularDiagram;

struct Search<'a> {
    diagram: &'a SingularDiagram,
    rules: &'a ColoringRules,
    /// Crossings touching each semiarc.
    incident: Vec<Vec<usize>>,
    found: Vec<Vec<Element>>,
}

impl Search<'_> {
    /// Narrows every slot of crossing `c` to the colors supported by some
    /// allowed tuple. Returns the semiarcs whose domains shrank, or `None`
    /// on a wipeout.
    fn revise(&self, c: usize, domains: &mut [Domain]) -> Option<Vec<usize>> {
        let crossing = &self.diagram.crossings()[c];
        let ports = crossing.ports.map(|a| a.0);
        let n = self.rules.order();
        let mut support = [(); 4].map(|_| Domain::empty(n));
        let mut any = false;
        for t in self.rules.tuples(crossing.kind) {
            let fits = (0..4).all(|k| domains[ports[k]].contains(t[k]))
                && (0..4).all(|k| (0..k).all(|j| ports[j] != ports[k] || t[j] == t[k]));
            if fits {
                any = true;
                for k in 0..4 {
                    support[k].insert(t[k]);
                }
            }
        }
        if !any {
            return None;
        }
        let mut shrunk = Vec::new();
        for k in 0..4 {
            if domains[ports[k]].intersect(&support[k]) {
                shrunk.push(ports[k]);
            }
        }
        Some(shrunk)
    }

    fn propagate(&self, domains: &mut [Domain], mut queue: VecDeque<usize>) -> bool {
        let mut queued = vec![false; self.diagram.crossings().len()];
        for &c in &queue {
            queued[c] = true;
        }
        while let Some(c) = queue.pop_front() {
            queued[c] = false;
            let Some(shrunk) = self.revise(c, domains) else {
                return false;
            };
            for a in shrunk {
                for &other in &self.incident[a] {
                    if !queued[other] {
                        queued[other] = true;
                        queue.push_back(other);
                    }
                }
            }
        }
        true
    }

    fn branch(&mut self, domains: Vec<Domain>) {
        // Fail first: the undecided semiarc with the fewest candidate colors.
        let pick = domains
            .iter()
            .enumerate()
            .filter(|(_, d)| d.len() > 1)
            .min_by_key(|(a, d)| (d.len(), std::cmp::Reverse(self.incident[*a].len())))
            .map(|(a, _)| a);
        let Some(a) = pick else {
            self.found
                .push(domains.iter().map(|d| d.first().expect("nonempty domain")).collect());
            return;
        };
        let n = self.rules.order();
        for x in domains[a].iter().collect::<Vec<_>>() {
            let mut next = domains.clone();
            next[a] = Domain::single(n, x);
            if self.propagate(&mut next, self.incident[a].iter().copied().collect()) {
                self.branch(next);
            }
        }
    }
}

/// All semiarc color vectors satisfying the rules at every crossing, sorted.
pub fn solve(d: &SingularDiagram, rules: &ColoringRules) -> Vec<Vec<Element>> {
    let mut incident = vec![Vec::new(); d.semiarc_count()];
    for (c, crossing) in d.crossings().iter().enumerate() {
        for a in crossing.ports {
            if !incident[a.0].contains(&c) {
                incident[a.0].push(c);
            }
        }
    }
    let mut search = Search {
        diagram: d,
        rules,
        incident,
        found: Vec::new(),
    };
    let mut domains = vec![Domain::full(rules.order()); d.semiarc_count()];
    if rules.order() > 0 && search.propagate(&mut domains, (0..d.crossings().len()).collect()) {
        search.branch(domains);
    }
    let mut found = search.found;
    found.sort();
    found
}
