use std::fmt;

use super::Construction;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AuditFailure {
    pub check: &'static str,
    pub element: Option<String>,
    pub detail: String,
}

impl fmt::Display for AuditFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.element {
            Some(e) => write!(f, "{}: {} ({})", self.check, self.detail, e),
            None => write!(f, "{}: {}", self.check, self.detail),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AuditReport {
    pub checks_run: usize,
    pub failures: Vec<AuditFailure>,
}

impl AuditReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn check(&mut self, name: &'static str) -> Check<'_> {
        self.checks_run += 1;
        Check { report: self, name }
    }
}

struct Check<'a> {
    report: &'a mut AuditReport,
    name: &'static str,
}

impl Check<'_> {
    fn fail(&mut self, element: Option<String>, detail: impl Into<String>) {
        self.report.failures.push(AuditFailure {
            check: self.name,
            element,
            detail: detail.into(),
        });
    }
}

/// Checks the layer structure of a (non-extended) construction against its
/// poset: extremal elements, ranks, antichains and the cover of each `u_j`
/// inside each `D^μ`.
pub fn structural_audit(c: &Construction) -> AuditReport {
    let p = &c.poset;
    let l = &c.layers;
    let n = c.degree();
    let mut report = AuditReport::default();
    let name = |x: usize| Some(p.tag(x).to_string());

    {
        let mut ck = report.check("layer sizes");
        if l.fence_lower.len() != n || l.fence_upper.len() != n {
            ck.fail(
                None,
                format!(
                    "fence has {} elements, expected {}",
                    l.fence().count(),
                    2 * n
                ),
            );
        }
        if l.top.len() != n {
            ck.fail(
                None,
                format!("top layer has {} elements, expected {n}", l.top.len()),
            );
        }
        if l.group.len() != c.group.order() {
            ck.fail(None, "group layer size differs from |G|");
        }
        for d in &l.d_groups {
            if d.points.len() != d.mu.domain().len() {
                ck.fail(None, format!("D^{} has {} points", d.mu, d.points.len()));
            }
        }
    }

    {
        let mut expected = vec![false; p.len()];
        for &t in &l.top {
            expected[t] = true;
        }
        let mut ck = report.check("maximal elements are the top layer");
        compare_set(&mut ck, &expected, &p.maximal_elements(), |x| {
            p.tag(x).to_string()
        });
    }

    {
        let mut expected = vec![false; p.len()];
        for &x in l.fence_lower.iter().chain(&l.group) {
            expected[x] = true;
        }
        let mut ck = report.check("minimal elements are the lower fence and the group layer");
        compare_set(&mut ck, &expected, &p.minimal_elements(), |x| {
            p.tag(x).to_string()
        });
    }

    {
        let mut ck = report.check("rank layers");
        let layers: [(Vec<usize>, usize); 5] = [
            (l.fence_lower.clone(), 0),
            (l.group.clone(), 0),
            (l.fence_upper.clone(), 1),
            (l.d_points().collect(), 2),
            (l.top.clone(), 3),
        ];
        for (members, want) in layers {
            for x in members {
                if p.rank(x) != want {
                    ck.fail(name(x), format!("rank {} but expected {want}", p.rank(x)));
                }
            }
        }
    }

    {
        let mut ck = report.check("fence shape");
        for j in 0..n {
            let mut want = vec![l.fence_lower[j]];
            if j + 1 < n {
                want.push(l.fence_lower[j + 1]);
            }
            let mut got: Vec<usize> = p
                .lower_covers(l.fence_upper[j])
                .iter()
                .copied()
                .filter(|x| l.fence_lower.contains(x))
                .collect();
            got.sort_unstable();
            if got != want {
                ck.fail(
                    name(l.fence_upper[j]),
                    "lower fence covers differ from the zigzag",
                );
            }
            if j > 0 && !p.lt(l.fence_lower[j], l.fence_upper[j - 1]) {
                ck.fail(
                    name(l.fence_lower[j]),
                    "not below the previous upper fence point",
                );
            }
        }
    }

    for (label, members) in [
        ("group layer is an antichain", l.group.clone()),
        ("D layer is an antichain", l.d_points().collect::<Vec<_>>()),
        ("top layer is an antichain", l.top.clone()),
    ] {
        let mut ck = report.check(label);
        'outer: for (k, &x) in members.iter().enumerate() {
            for &y in &members[k + 1..] {
                if p.comparable(x, y) {
                    ck.fail(name(x), format!("comparable with {}", p.tag(y)));
                    break 'outer;
                }
            }
        }
    }

    {
        let mut ck = report.check("(j, mu) is the unique upper cover of u_j in D^mu");
        for d in &l.d_groups {
            for (&j, &point) in d.mu.domain().iter().zip(&d.points) {
                let u = l.fence_upper[j as usize];
                let covers: Vec<usize> = d
                    .points
                    .iter()
                    .copied()
                    .filter(|&x| p.upper_covers(u).contains(&x))
                    .collect();
                if covers != [point] {
                    ck.fail(
                        name(point),
                        format!(
                            "u{} has {} upper covers in its D group",
                            j + 1,
                            covers.len()
                        ),
                    );
                }
            }
        }
    }

    report
}

fn compare_set(
    ck: &mut Check<'_>,
    expected: &[bool],
    actual: &[usize],
    label: impl Fn(usize) -> String,
) {
    let mut seen = vec![false; expected.len()];
    for &x in actual {
        seen[x] = true;
        if !expected[x] {
            ck.fail(Some(label(x)), "unexpected member");
        }
    }
    for (x, (&want, &got)) in expected.iter().zip(&seen).enumerate() {
        if want && !got {
            ck.fail(Some(label(x)), "missing member");
        }
    }
}
