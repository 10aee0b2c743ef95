//! Backtracking solver for systems of `<=+` / `<=-` constraints between
//! letter-valued variables.

use crate::Alphabet;

/// One side of a constraint.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Term {
    /// `f(index)`, or its negation in a symmetric alphabet.
    Var { index: usize, negated: bool },
    /// The zero letter of a symmetric alphabet.
    Zero,
}

impl Term {
    pub fn var(index: usize) -> Self {
        Term::Var { index, negated: false }
    }

    fn index(self) -> Option<usize> {
        match self {
            Term::Var { index, .. } => Some(index),
            Term::Zero => None,
        }
    }
}

/// `lo <=+ hi` when `plus`, else `lo <=- hi`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Constraint {
    pub lo: Term,
    pub hi: Term,
    pub plus: bool,
}

#[derive(Clone, Debug, Default)]
pub struct ConstraintSystem {
    pub nvars: usize,
    pub constraints: Vec<Constraint>,
}

struct Plan {
    order: Vec<usize>,
    /// `checks[s]`: constraints decided once `order[..=s]` is assigned.
    checks: Vec<Vec<Constraint>>,
}

impl ConstraintSystem {
    pub fn new(nvars: usize) -> Self {
        ConstraintSystem { nvars, constraints: Vec::new() }
    }

    pub fn push(&mut self, lo: Term, hi: Term, plus: bool) {
        self.constraints.push(Constraint { lo, hi, plus });
    }

    fn neighbours(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.nvars];
        for c in &self.constraints {
            if let (Some(a), Some(b)) = (c.lo.index(), c.hi.index()) {
                if a != b {
                    adj[a].push(b);
                    adj[b].push(a);
                }
            }
        }
        adj
    }

    /// Connected components, each listed in breadth-first order.
    fn components(&self) -> Vec<Vec<usize>> {
        let adj = self.neighbours();
        let mut seen = vec![false; self.nvars];
        let mut out = Vec::new();
        for s in 0..self.nvars {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut head = 0;
            while head < comp.len() {
                let v = comp[head];
                head += 1;
                for &w in &adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
            }
            out.push(comp);
        }
        out
    }

    fn plan(&self, order: Vec<usize>) -> Plan {
        let mut step = vec![usize::MAX; self.nvars];
        for (s, &v) in order.iter().enumerate() {
            step[v] = s;
        }
        let mut checks = vec![Vec::new(); order.len()];
        for c in &self.constraints {
            let s = [c.lo.index(), c.hi.index()].into_iter().flatten().map(|v| step[v]).max();
            if let Some(s) = s {
                if s != usize::MAX {
                    checks[s].push(*c);
                }
            }
        }
        Plan { order, checks }
    }

    fn value(t: Term, assign: &[usize], alph: &Alphabet) -> usize {
        match t {
            Term::Zero => alph.zero().expect("zero term needs a symmetric alphabet"),
            Term::Var { index, negated: false } => assign[index],
            Term::Var { index, negated: true } => alph.negate(assign[index]),
        }
    }

    fn run(&self, plan: &Plan, alph: &Alphabet, assign: &mut Vec<usize>, visit: &mut dyn FnMut(&[usize])) {
        fn rec(plan: &Plan, s: usize, alph: &Alphabet, assign: &mut Vec<usize>, visit: &mut dyn FnMut(&[usize])) {
            if s == plan.order.len() {
                visit(assign);
                return;
            }
            let v = plan.order[s];
            for letter in 0..alph.len() {
                assign[v] = letter;
                let ok = plan.checks[s].iter().all(|c| {
                    let a = ConstraintSystem::value(c.lo, assign, alph);
                    let b = ConstraintSystem::value(c.hi, assign, alph);
                    alph.le(a, b, c.plus)
                });
                if ok {
                    rec(plan, s + 1, alph, assign, visit);
                }
            }
        }
        rec(plan, 0, alph, assign, visit);
    }

    fn check_alphabet(&self, alph: &Alphabet) {
        let needs_sym = self
            .constraints
            .iter()
            .any(|c| [c.lo, c.hi].iter().any(|t| matches!(t, Term::Zero | Term::Var { negated: true, .. })));
        assert!(!needs_sym || alph.is_symmetric(), "signed constraints need a symmetric alphabet");
    }

    /// Calls `visit` with every satisfying assignment (letter index per variable).
    pub fn for_each(&self, alph: &Alphabet, mut visit: impl FnMut(&[usize])) {
        self.check_alphabet(alph);
        let order: Vec<usize> = self.components().into_iter().flatten().collect();
        let plan = self.plan(order);
        let mut assign = vec![0; self.nvars];
        // constant constraints (zero against zero) are decided up front
        let consts_ok = self.constraints.iter().filter(|c| c.lo.index().is_none() && c.hi.index().is_none()).all(|c| {
            let z = alph.zero().expect("symmetric");
            alph.le(z, z, c.plus)
        });
        if consts_ok {
            self.run(&plan, alph, &mut assign, &mut visit);
        }
    }

    /// Number of satisfying assignments, multiplied over components.
    pub fn count(&self, alph: &Alphabet) -> u128 {
        self.check_alphabet(alph);
        if self.constraints.iter().any(|c| c.lo.index().is_none() && c.hi.index().is_none()) {
            let mut n = 0u128;
            self.for_each(alph, |_| n += 1);
            return n;
        }
        let mut total = 1u128;
        let mut assign = vec![0; self.nvars];
        for comp in self.components() {
            let plan = self.plan(comp);
            let mut n = 0u128;
            self.run(&plan, alph, &mut assign, &mut |_| n += 1);
            total *= n;
            if total == 0 {
                break;
            }
        }
        total
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn free_variables_multiply() {
        let alph = Alphabet::new(vec![true; 3]);
        let sys = ConstraintSystem::new(2);
        assert_eq!(sys.count(&alph), 9);
    }

    #[test]
    fn strict_and_weak() {
        let alph = Alphabet::new(vec![true; 4]);
        let mut sys = ConstraintSystem::new(2);
        sys.push(Term::var(0), Term::var(1), true);
        assert_eq!(sys.count(&alph), 10); // weak: C(5,2)
        let mut sys = ConstraintSystem::new(2);
        sys.push(Term::var(0), Term::var(1), false);
        assert_eq!(sys.count(&alph), 6); // strict: C(4,2)
        let mut n = 0;
        sys.for_each(&alph, |a| {
            assert!(a[0] < a[1]);
            n += 1
        });
        assert_eq!(n, 6);
    }
}
