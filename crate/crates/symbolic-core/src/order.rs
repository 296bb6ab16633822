use std::cmp::Ordering;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OrderKind {
    GradedLex,
    Lex,
}

/// Monomial order: `kind` applied with variables ranked by `priority`
/// (first entry is the largest variable).
///
/// With `param_start = Some(k)` the variables from index `k` on form a
/// parameter block: the leading part is decided on the first `k` variables
/// alone and ties are broken by graded lex on the parameters. This is a
/// product order, so parameters behave like coefficients when selecting
/// leading terms.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialOrder {
    pub kind: OrderKind,
    pub priority: Vec<usize>,
    pub param_start: Option<usize>,
}

impl MonomialOrder {
    pub fn grlex(n: usize) -> Self {
        MonomialOrder {
            kind: OrderKind::GradedLex,
            priority: (0..n).collect(),
            param_start: None,
        }
    }

    pub fn lex(n: usize) -> Self {
        MonomialOrder {
            kind: OrderKind::Lex,
            priority: (0..n).collect(),
            param_start: None,
        }
    }

    /// `kind` on the first `k` of `n` variables, parameters after.
    pub fn with_params(kind: OrderKind, k: usize, n: usize) -> Self {
        MonomialOrder {
            kind,
            priority: (0..n).collect(),
            param_start: if k < n { Some(k) } else { None },
        }
    }

    pub fn nvars(&self) -> usize {
        self.priority.len()
    }

    fn split(&self) -> (Vec<usize>, Vec<usize>) {
        match self.param_start {
            None => (self.priority.clone(), Vec::new()),
            Some(k) => self.priority.iter().partition(|&&i| i < k),
        }
    }

    /// Linear sort key: comparing keys lexicographically is the order.
    /// Every exponent appears exactly once in the key, so the key map is
    /// injective and additive.
    pub fn key(&self, e: &[i32]) -> Vec<i32> {
        let (main, params) = self.split();
        let mut k = Vec::with_capacity(e.len() + 2);
        if self.kind == OrderKind::GradedLex {
            k.push(main.iter().map(|&i| e[i]).sum());
        }
        k.extend(main.iter().map(|&i| e[i]));
        if !params.is_empty() {
            k.push(params.iter().map(|&i| e[i]).sum());
            k.extend(params.iter().map(|&i| e[i]));
        }
        k
    }

    pub fn cmp(&self, a: &[i32], b: &[i32]) -> Ordering {
        self.key(a).cmp(&self.key(b))
    }
}
