//! Constructive labelings that realize the closed-form values and upper
//! bounds: explicit pair/triple schemes for the friendship and book
//! families and the staged corona constructions. Every construction is
//! machine-checked before it is returned — a labeling that some
//! non-identity automorphism preserves is a `ConstructionFailure`, never a
//! silent wrong answer.

use serde::Serialize;

use crate::aut::{self, enumerate_automorphisms};
use crate::error::{Error, Result};
use crate::formulas;
use crate::graph::Graph;
use crate::search::{self, LabelKind, SearchOptions};

/// A constructed graph together with its verified labeling.
#[derive(Debug, Clone, Serialize)]
pub struct Construction {
    #[serde(skip)]
    pub graph: Graph,
    pub kind: LabelKind,
    pub scheme: String,
    pub labels: Vec<usize>,
    pub labels_used: usize,
}

impl Construction {
    fn checked(
        graph: Graph,
        kind: LabelKind,
        scheme: &str,
        labels: Vec<usize>,
    ) -> Result<Construction> {
        let preserver = match kind {
            LabelKind::Vertex => aut::find_vertex_label_preserver(&graph, &labels)?,
            LabelKind::Edge => aut::find_edge_label_preserver(&graph, &labels)?,
        };
        if let Some(p) = preserver {
            return Err(Error::ConstructionFailure(format!(
                "{scheme}: labeling preserved by non-identity automorphism {:?}",
                p.image()
            )));
        }
        let labels_used = search::max_label(&labels);
        Ok(Construction {
            graph,
            kind,
            scheme: scheme.into(),
            labels,
            labels_used,
        })
    }
}

/// Ordered pairs `(x, y)` with `x < y <= k`, grouped by the stage `s = y`
/// and within a stage by descending first coordinate:
/// `(1,2), (2,3), (1,3), (3,4), ...`.
pub fn pair_scheme(k: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for s in 2..=k {
        for a in (1..s).rev() {
            out.push((a, s));
        }
    }
    out
}

/// Side/side/base triples `(x, y, z)` with `x < y`: stage `s` runs the
/// base label `z` from 1 to `s` over the pairs `(a, s)` with `a`
/// ascending, and closes with the earlier pairs at `z = s`:
/// `(1,2,1), (1,2,2), (1,3,1), (2,3,1), (1,3,2), ...`.
pub fn triple_scheme(k: usize) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for s in 2..=k {
        for z in 1..=s {
            for a in 1..s {
                out.push((a, s, z));
            }
            if z == s {
                for x in 1..s {
                    for y in (x + 1)..s {
                        out.push((x, y, s));
                    }
                }
            }
        }
    }
    out
}

/// All ordered pairs over `1..=k`, grouped by the stage `s = max(x, y)`:
/// `(1,1), (2,1), (2,2), (1,2), (3,1), (3,2), (3,3), (1,3), (2,3), ...`.
pub fn page_pair_scheme(k: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for s in 1..=k {
        for j in 1..=s {
            out.push((s, j));
        }
        for i in 1..s {
            out.push((i, s));
        }
    }
    out
}

/// Pair sequence for labeling H-edge classes and their middle edges in
/// the corona: stage `s` covers the pairs with `max = s`, in the
/// order `(1,1), (1,2), (2,1), (2,2), (1,3), (2,3), (3,3), (3,1), (3,2),`
/// then `(s,1)..(s,s), (1,s)..(s-1,s)` for `s >= 4`.
pub fn middle_pair_scheme(k: usize) -> Vec<(usize, usize)> {
    let mut out = vec![(1, 1)];
    if k >= 2 {
        out.extend([(1, 2), (2, 1), (2, 2)]);
    }
    if k >= 3 {
        out.extend([(1, 3), (2, 3), (3, 3), (3, 1), (3, 2)]);
    }
    for s in 4..=k {
        for j in 1..=s {
            out.push((s, j));
        }
        for i in 1..s {
            out.push((i, s));
        }
    }
    out
}

/// Middle-edge label-count vectors, in blocks of increasing label count
/// `r`: block `r` holds every vector `(L_1, ..., L_r)` of nonnegative
/// counts summing to `m` with `L_r >= 1`, in descending lexicographic
/// order. Emits `take` vectors.
pub fn count_vector_scheme(m: usize, take: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::with_capacity(take);
    for r in 1.. {
        let mut vec = vec![0usize; r];
        desc_vectors(m, 0, &mut vec, take, &mut out);
        if out.len() >= take {
            break;
        }
    }
    out
}

fn desc_vectors(
    rem: usize,
    pos: usize,
    vec: &mut Vec<usize>,
    take: usize,
    out: &mut Vec<Vec<usize>>,
) {
    if out.len() >= take {
        return;
    }
    if pos + 1 == vec.len() {
        if rem >= 1 {
            vec[pos] = rem;
            out.push(vec.clone());
        }
        return;
    }
    for l in (0..=rem).rev() {
        vec[pos] = l;
        desc_vectors(rem - l, pos + 1, vec, take, out);
        if out.len() >= take {
            return;
        }
    }
}

/// Distinguishing vertex labeling of the friendship graph with the
/// minimum number of labels: the center gets 1 and the base pairs walk
/// the pair scheme.
pub fn label_friendship_vertices(n: usize) -> Result<Construction> {
    let k = formulas::dist_number_friendship(n as u64)?.formula_value as usize;
    let g = Graph::friendship(n)?;
    let pairs = pair_scheme(k);
    let mut labels = vec![0usize; g.vertex_count()];
    labels[0] = 1;
    for (i, &(x, y)) in pairs.iter().take(n).enumerate() {
        labels[2 * i + 1] = x;
        labels[2 * i + 2] = y;
    }
    Construction::checked(g, LabelKind::Vertex, "friendship-number", labels)
}

/// Distinguishing edge labeling of the friendship graph with the minimum
/// number of labels: triangle sides and base walk the triple scheme.
pub fn label_friendship_edges(n: usize) -> Result<Construction> {
    let k = formulas::dist_index_friendship(n as u64)?.formula_value as usize;
    let g = Graph::friendship(n)?;
    let triples = triple_scheme(k);
    let mut labels = vec![0usize; g.edge_count()];
    for (i, &(x, y, z)) in triples.iter().take(n).enumerate() {
        let (a, b) = (2 * i + 1, 2 * i + 2);
        labels[g.edge_index(0, a).expect("side edge")] = x;
        labels[g.edge_index(0, b).expect("side edge")] = y;
        labels[g.edge_index(a, b).expect("base edge")] = z;
    }
    Construction::checked(g, LabelKind::Edge, "friendship-index", labels)
}

/// Distinguishing vertex labeling of the book graph with the minimum
/// number of labels: the spine gets (1, 2) and page pairs walk the page
/// scheme; a page that would collide with the spine pair trades places
/// with the next page.
pub fn label_book_vertices(n: usize) -> Result<Construction> {
    let k = formulas::dist_number_book(n as u64)?.formula_value as usize;
    let g = Graph::book(n)?;
    let mut pairs: Vec<(usize, usize)> = page_pair_scheme(k).into_iter().take(n).collect();
    let mut i = 0;
    while i < pairs.len() {
        if pairs[i] == (1, 2) && i + 1 < pairs.len() {
            pairs.swap(i, i + 1);
            i += 1;
        }
        i += 1;
    }
    let mut labels = vec![0usize; g.vertex_count()];
    labels[0] = 1;
    labels[1] = 2;
    for (i, &(x, y)) in pairs.iter().enumerate() {
        labels[2 * i + 2] = x;
        labels[2 * i + 3] = y;
    }
    Construction::checked(g, LabelKind::Vertex, "book-number", labels)
}

/// Checks that `labels` is a verified distinguishing vertex labeling of
/// `g` and returns the number of labels it uses.
fn validated_vertex_witness(g: &Graph, labels: &[usize]) -> Result<usize> {
    search::validate_labels(labels, g.vertex_count())?;
    if aut::find_vertex_label_preserver(g, labels)?.is_some() {
        return Err(Error::InvalidWitness);
    }
    Ok(search::max_label(labels))
}

/// Edge analogue of [`validated_vertex_witness`].
fn validated_edge_witness(g: &Graph, labels: &[usize]) -> Result<usize> {
    search::validate_labels(labels, g.edge_count())?;
    if aut::find_edge_label_preserver(g, labels)?.is_some() {
        return Err(Error::InvalidWitness);
    }
    Ok(search::max_label(labels))
}

fn exact_index(g: &Graph, opts: &SearchOptions) -> Result<(usize, Vec<usize>)> {
    let r = search::exact_distinguishing_index(g, opts)?;
    let v = r.value.ok_or_else(|| {
        Error::WrongRegime("factor has a nontrivial edge kernel, so no edge labeling works".into())
    })?;
    Ok((v, r.witness.expect("witness accompanies value")))
}

fn require_connected(g: &Graph, h: &Graph) -> Result<()> {
    if !g.is_connected() || !h.is_connected() {
        return Err(Error::WrongRegime("corona constructions need connected factors".into()));
    }
    Ok(())
}

/// D(G) <= D(H) regime: the corona inherits G's distinguishing labeling
/// and every copy of H carries the same distinguishing labeling of H.
/// `g_lab` and `h_lab` are distinguishing labelings of the factors with
/// the label count of `g_lab` not exceeding that of `h_lab`.
pub fn label_corona_vertices_equal_regime(
    g: &Graph,
    h: &Graph,
    g_lab: &[usize],
    h_lab: &[usize],
) -> Result<Construction> {
    require_connected(g, h)?;
    if g.vertex_count() < 2 {
        return Err(Error::WrongRegime("needs G != K_1".into()));
    }
    let dg = validated_vertex_witness(g, g_lab)?;
    let dh = validated_vertex_witness(h, h_lab)?;
    if dg > dh {
        return Err(Error::WrongRegime(format!("needs D(G) <= D(H), got {dg} > {dh}")));
    }
    let (ng, nh) = (g.vertex_count(), h.vertex_count());
    let c = Graph::corona(g, h)?;
    let mut labels = vec![0usize; c.vertex_count()];
    labels[..ng].copy_from_slice(g_lab);
    for i in 0..ng {
        for k in 0..nh {
            labels[ng + i * nh + k] = h_lab[k];
        }
    }
    Construction::checked(c, LabelKind::Vertex, "corona-number-equal-regime", labels)
}

/// D(G) > D(H) regime: each label class of G receives a distinct pair
/// (class label, copy shift); stage `t` spends the pairs
/// `(1,t)..(D(H)+t, t)` and then `(D(H)+t, 0)..(D(H)+t, t-1)`.
pub fn label_corona_vertices_special_regime(
    g: &Graph,
    h: &Graph,
    g_lab: &[usize],
    h_lab: &[usize],
) -> Result<Construction> {
    require_connected(g, h)?;
    if g.vertex_count() < 2 {
        return Err(Error::WrongRegime("needs G != K_1".into()));
    }
    let dg = validated_vertex_witness(g, g_lab)?;
    let dh = validated_vertex_witness(h, h_lab)?;
    if dg <= dh {
        return Err(Error::WrongRegime(format!("needs D(G) > D(H), got {dg} <= {dh}")));
    }
    // (class label, copy shift) pairs, distinct across stages
    let mut pairs: Vec<(usize, usize)> = Vec::with_capacity(dg);
    'outer: for t in 0.. {
        for i in 1..=dh + t {
            pairs.push((i, t));
            if pairs.len() == dg {
                break 'outer;
            }
        }
        for s in 0..t {
            pairs.push((dh + t, s));
            if pairs.len() == dg {
                break 'outer;
            }
        }
    }
    let (ng, nh) = (g.vertex_count(), h.vertex_count());
    let c = Graph::corona(g, h)?;
    let mut labels = vec![0usize; c.vertex_count()];
    for v in 0..ng {
        let class = g_lab[v]; // 1-based
        let (vlabel, shift) = pairs[class - 1];
        labels[v] = vlabel;
        for k in 0..nh {
            labels[ng + v * nh + k] = h_lab[k] + shift;
        }
    }
    Construction::checked(c, LabelKind::Vertex, "corona-number-dominant-g", labels)
}

/// K_1 ∘ H: a distinguishing labeling of H plus a fresh label on the apex.
pub fn label_corona_vertices_apex(h: &Graph, h_lab: &[usize]) -> Result<Construction> {
    if !h.is_connected() {
        return Err(Error::WrongRegime("needs H connected".into()));
    }
    let dh = validated_vertex_witness(h, h_lab)?;
    let k1 = Graph::complete(1)?;
    let c = Graph::corona(&k1, h)?;
    let mut labels = vec![dh + 1];
    labels.extend_from_slice(h_lab);
    Construction::checked(c, LabelKind::Vertex, "corona-number-apex", labels)
}

/// Edge labeling when D'(H) >= 2: G keeps its distinguishing edge
/// labeling; the H-edge classes and their middle edges walk the middle
/// pair scheme, identically in every copy.
pub fn label_corona_edges_pair_scheme(
    g: &Graph,
    h: &Graph,
    g_lab: &[usize],
    h_lab: &[usize],
) -> Result<Construction> {
    require_connected(g, h)?;
    if g.vertex_count() < 2 {
        return Err(Error::WrongRegime("needs G != K_1".into()));
    }
    validated_edge_witness(g, g_lab)?;
    let dph = validated_edge_witness(h, h_lab)?;
    if dph < 2 {
        return Err(Error::WrongRegime(format!("needs D'(H) >= 2, got {dph}")));
    }
    let k = {
        let s = formulas::isqrt(dph as u64) as usize;
        if s * s == dph {
            s
        } else {
            s + 1
        }
    };
    let pairs = middle_pair_scheme(k);
    // class of an H-vertex = max class of its incident H-edges
    let nh = h.vertex_count();
    let mut vertex_class = vec![0usize; nh];
    for (e, &(u, v)) in h.edges().iter().enumerate() {
        vertex_class[u] = vertex_class[u].max(h_lab[e]);
        vertex_class[v] = vertex_class[v].max(h_lab[e]);
    }
    let ng = g.vertex_count();
    let c = Graph::corona(g, h)?;
    let mut labels = vec![0usize; c.edge_count()];
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        labels[c.edge_index(u, v).expect("g edge")] = g_lab[e];
    }
    for i in 0..ng {
        let base = ng + i * nh;
        for (e, &(u, v)) in h.edges().iter().enumerate() {
            labels[c.edge_index(base + u, base + v).expect("copy edge")] = pairs[h_lab[e] - 1].0;
        }
        for w in 0..nh {
            labels[c.edge_index(i, base + w).expect("middle edge")] = pairs[vertex_class[w] - 1].1;
        }
    }
    Construction::checked(c, LabelKind::Edge, "corona-index-pair-scheme", labels)
}

/// Edge labeling when Aut(G) is trivial: either distinct middle labels
/// or a distinguishing edge labeling inside each copy, all other edges 1.
pub fn label_corona_edges_asymmetric_g(
    g: &Graph,
    h: &Graph,
    opts: &SearchOptions,
) -> Result<Construction> {
    require_connected(g, h)?;
    if g.vertex_count() < 2 {
        return Err(Error::WrongRegime("needs G != K_1".into()));
    }
    if h.vertex_count() == 2 {
        return Err(Error::WrongRegime("needs H != K_2".into()));
    }
    let aut_g = enumerate_automorphisms(g, opts.group_cap)?;
    if aut_g.order() != 1 {
        return Err(Error::WrongRegime(format!(
            "needs |Aut(G)| = 1, got {}",
            aut_g.order()
        )));
    }
    let (ng, nh) = (g.vertex_count(), h.vertex_count());
    let dph = if h.edge_count() == 0 {
        1
    } else {
        exact_index(h, opts)?.0
    };
    let c = Graph::corona(g, h)?;
    let mut labels = vec![1usize; c.edge_count()];
    if nh < dph {
        for i in 0..ng {
            let base = ng + i * nh;
            for w in 0..nh {
                labels[c.edge_index(i, base + w).expect("middle edge")] = w + 1;
            }
        }
    } else if h.edge_count() > 0 {
        let (_, h_lab) = exact_index(h, opts)?;
        for i in 0..ng {
            let base = ng + i * nh;
            for (e, &(u, v)) in h.edges().iter().enumerate() {
                labels[c.edge_index(base + u, base + v).expect("copy edge")] = h_lab[e];
            }
        }
    }
    Construction::checked(c, LabelKind::Edge, "corona-index-asymmetric-base", labels)
}

/// Edge labeling when D'(H) = 1 and |V(G)| <= |V(H)| + 1: copy `i`
/// (1-based) gets `i - 1` middle edges labeled 2, everything else 1.
pub fn label_corona_edges_staircase(
    g: &Graph,
    h: &Graph,
    opts: &SearchOptions,
) -> Result<Construction> {
    require_connected(g, h)?;
    if g.vertex_count() < 2 {
        return Err(Error::WrongRegime("needs G != K_1".into()));
    }
    if h.vertex_count() == 2 {
        return Err(Error::WrongRegime("needs H != K_2".into()));
    }
    let (ng, nh) = (g.vertex_count(), h.vertex_count());
    if ng > nh + 1 {
        return Err(Error::WrongRegime(format!(
            "needs |V(G)| <= |V(H)| + 1, got {ng} > {}",
            nh + 1
        )));
    }
    if h.edge_count() > 0 && exact_index(h, opts)?.0 != 1 {
        return Err(Error::WrongRegime("needs D'(H) = 1".into()));
    }
    let c = Graph::corona(g, h)?;
    let mut labels = vec![1usize; c.edge_count()];
    for i in 0..ng {
        let base = ng + i * nh;
        for w in 0..i {
            labels[c.edge_index(i, base + w).expect("middle edge")] = 2;
        }
    }
    Construction::checked(c, LabelKind::Edge, "corona-index-staircase", labels)
}

/// Edge labeling when D'(H) = 1 and D(G) >= 2 with no size condition:
/// copy `i` receives the `i`-th label-count vector, realized as a
/// non-decreasing label sequence on its middle edges; other edges get 1.
pub fn label_corona_edges_count_vectors(
    g: &Graph,
    h: &Graph,
    k: usize,
    opts: &SearchOptions,
) -> Result<Construction> {
    require_connected(g, h)?;
    if g.vertex_count() < 2 {
        return Err(Error::WrongRegime("needs G != K_1".into()));
    }
    if h.vertex_count() < 2 {
        return Err(Error::WrongRegime("needs |V(H)| >= 2".into()));
    }
    if h.vertex_count() == 2 {
        return Err(Error::WrongRegime("needs H != K_2".into()));
    }
    if enumerate_automorphisms(g, opts.group_cap)?.order() < 2 {
        return Err(Error::WrongRegime("needs D(G) >= 2".into()));
    }
    if exact_index(h, opts)?.0 != 1 {
        return Err(Error::WrongRegime("needs D'(H) = 1".into()));
    }
    let (ng, nh) = (g.vertex_count(), h.vertex_count());
    match formulas::corona_edge_bound_table(nh as u64, ng as u64, k.max(1)) {
        Ok(_) => {}
        Err(Error::NotFound { .. }) => {
            let have: u128 = (1..=k as u64)
                .map(|r| formulas::binomial(nh as u64 + r - 2, r - 1))
                .sum();
            return Err(Error::NotEnoughVectors {
                k,
                have: have.min(u64::MAX as u128) as u64,
                need: ng as u64,
            });
        }
        Err(e) => return Err(e),
    }
    let vectors = count_vector_scheme(nh, ng);
    let c = Graph::corona(g, h)?;
    let mut labels = vec![1usize; c.edge_count()];
    for (i, vec) in vectors.iter().enumerate() {
        let base = ng + i * nh;
        let mut w = 0usize;
        for (label0, &count) in vec.iter().enumerate() {
            for _ in 0..count {
                labels[c.edge_index(i, base + w).expect("middle edge")] = label0 + 1;
                w += 1;
            }
        }
    }
    Construction::checked(c, LabelKind::Edge, "corona-index-count-vectors", labels)
}
