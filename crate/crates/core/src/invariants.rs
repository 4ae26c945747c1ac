//! Scheme invariants of a zero-dimensional `Y = V(I)`: differentials,
//! tangent and normal modules, the space of first-order deformations that
//! keep `Omega_Y` flat, and the `q` invariant of a pair of subvarieties.

use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::artin::{quotient_algebra, ArtinAlgebra};
use crate::error::{Error, Result};
use crate::finmod::{
    cokernel_presentation, free_module, hom_module, quotient_by_subspace, submodule,
    submodule_closure, FinModule, HomModule,
};
use crate::groebner::Ideal;
use crate::linalg::{Matrix, Subspace, Vector};
use crate::ring::{FieldSpec, Monomial, Poly};

/// Column `j` is the gradient of the `j`-th generator.
pub fn jacobian_columns(ideal: &Ideal) -> Vec<Vec<Poly>> {
    let n = ideal.ring().nvars();
    ideal
        .generators()
        .iter()
        .map(|f| (0..n).map(|i| f.derivative(i)).collect())
        .collect()
}

fn omega_of(algebra: &Arc<ArtinAlgebra>, ideal: &Ideal) -> Result<FinModule> {
    let q = cokernel_presentation(algebra, ideal.ring().nvars(), &jacobian_columns(ideal))?;
    Ok(q.module)
}

/// `Omega_{A/k}` as the cokernel of the transposed Jacobian `A^g -> A^n`.
pub fn kaehler(ideal: &Ideal) -> Result<FinModule> {
    omega_of(&quotient_algebra(ideal)?, ideal)
}

/// `T_Y = Hom_A(Omega, A)`.
pub fn tangent_module(ideal: &Ideal) -> Result<HomModule> {
    let a = quotient_algebra(ideal)?;
    hom_module(&omega_of(&a, ideal)?, &free_module(&a, 1)?)
}

pub fn tangent_degree(ideal: &Ideal) -> Result<usize> {
    Ok(tangent_module(ideal)?.dim())
}

/// `I/I^2` as a subspace of `B = R/I^2`, viewed as an `R/I`-module.
#[derive(Clone, Debug)]
pub struct Conormal {
    pub module: FinModule,
    outer: Arc<ArtinAlgebra>,
    span: Subspace,
}

impl Conormal {
    /// Coordinates of the class of `p` in `I/I^2`; fails unless `p` is in `I`.
    pub fn class_of(&self, p: &Poly) -> Result<Vector> {
        let v = self.outer.element_vector(p)?;
        self.span
            .coordinates(&v)
            .ok_or_else(|| Error::Precondition(format!("{p} is not in the ideal")))
    }

    /// Dimension of `R/I^2`.
    pub fn outer_degree(&self) -> usize {
        self.outer.degree()
    }
}

fn conormal_of(algebra: &Arc<ArtinAlgebra>, ideal: &Ideal) -> Result<Conormal> {
    let outer = quotient_algebra(&ideal.power(2)?)?;
    let ambient = free_module(&outer, 1)?;
    let images: Vec<Vector> = ideal
        .generators()
        .iter()
        .map(|f| outer.element_vector(f))
        .collect::<Result<_>>()?;
    let seed = Subspace::span(outer.field(), outer.degree(), images.iter().cloned());
    let span = submodule_closure(&ambient, &seed)?;
    // I kills I/I^2: enough to check on the generators
    for g in ideal.groebner_basis() {
        for f in ideal.generators() {
            if !outer.ideal().contains(&(g * f))? {
                return Err(Error::Precondition(
                    "ideal does not annihilate I/I^2".into(),
                ));
            }
        }
    }
    let restricted = submodule(&ambient, &span)?;
    let coords = images
        .iter()
        .map(|v| span.coordinates(v).expect("generator lies in I/I^2"))
        .collect();
    let module = FinModule::new(
        algebra,
        restricted.actions().to_vec(),
        crate::finmod::Provenance::Subquotient,
    )?
    .with_generators(coords);
    Ok(Conormal {
        module,
        outer,
        span,
    })
}

pub fn conormal(ideal: &Ideal) -> Result<Conormal> {
    conormal_of(&quotient_algebra(ideal)?, ideal)
}

/// `N = Hom_A(I/I^2, A)`.
pub fn normal_module(ideal: &Ideal) -> Result<HomModule> {
    let a = quotient_algebra(ideal)?;
    let c = conormal_of(&a, ideal)?;
    hom_module(&c.module, &free_module(&a, 1)?)
}

/// First-order deformations `f_j -> f_j + eps*phi(f_j)` along which the
/// module of differentials stays flat over `k[eps]/(eps^2)`.
#[derive(Clone, Debug)]
pub struct OmegaDeformations {
    pub algebra: Arc<ArtinAlgebra>,
    pub conormal: Conormal,
    pub normal: HomModule,
    /// The fixed-Omega directions, in coordinates of `normal.module`.
    pub space: Subspace,
    ideal: Ideal,
}

impl OmegaDeformations {
    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    /// The A-submodule of the normal module generated by the space.
    pub fn closure(&self) -> Result<Subspace> {
        submodule_closure(&self.normal.module, &self.space)
    }

    /// The normal vector `f_j -> images[j]`, given as polynomials, if it is
    /// well defined.
    pub fn normal_vector(&self, images: &[Poly]) -> Result<Option<Vector>> {
        let gens = self.ideal.generators();
        if images.len() != gens.len() {
            return Err(Error::LengthMismatch(gens.len(), images.len()));
        }
        let classes: Vec<Vector> = gens
            .iter()
            .map(|f| self.conormal.class_of(f))
            .collect::<Result<_>>()?;
        let mut chosen = Vec::new();
        for u in self.normal.source_generators() {
            let Some(j) = classes.iter().position(|c| c == u) else {
                return Ok(None);
            };
            chosen.push(self.algebra.element_vector(&images[j])?);
        }
        let Some(phi) = self.normal.from_images(&chosen) else {
            return Ok(None);
        };
        // the chosen generators pin phi down; check the rest agree
        for (c, g) in classes.iter().zip(images) {
            if self.normal.apply(&phi, c) != self.algebra.element_vector(g)? {
                return Ok(None);
            }
        }
        Ok(Some(phi))
    }

    /// The translation along `x_i`: `f_j -> d f_j / d x_i`.
    pub fn translation(&self, i: usize) -> Result<Vector> {
        let images: Vec<Poly> = self
            .ideal
            .generators()
            .iter()
            .map(|f| f.derivative(i))
            .collect();
        self.normal_vector(&images)?
            .ok_or_else(|| Error::Precondition("translation is not a normal vector".into()))
    }
}

/// The space `V'` of first-order deformations fixing `Omega`.
///
/// With `J` the Jacobian, a relation `v` in `ker J` over `A` lifts to the
/// deformed ring `A[eps]` exactly when the class of
/// `sum_j d_i(g_j) v_j - phi(sum_j d_i(f_j) v_j)` lies in the image of `J`.
/// The second term comes from deforming the ring itself: `sum_j d_i f_j v_j`
/// lies in `I`, and in the deformed ring it equals `-eps` times its image
/// under `phi`. Flatness of the deformed differentials is the vanishing of
/// all these classes, which is linear in `phi`.
pub fn deformations_fixing_omega(ideal: &Ideal) -> Result<OmegaDeformations> {
    let a = quotient_algebra(ideal)?;
    let k = a.field();
    let d = a.degree();
    let nv = ideal.ring().nvars();
    let gens = ideal.generators().to_vec();
    let cols = jacobian_columns(ideal);
    let conormal = conormal_of(&a, ideal)?;
    let normal = hom_module(&conormal.module, &free_module(&a, 1)?)?;

    // J: A^g -> A^n, columns indexed by (generator, basis monomial)
    let target = free_module(&a, nv)?;
    let mut jcols = Vec::with_capacity(gens.len() * d);
    for col in &cols {
        jcols.extend(target.orbit(&crate::finmod::tuple_vector(&a, col)?));
    }
    let jbar = Matrix::from_columns(k, nv * d, &jcols);
    let image = jbar.column_space();
    let relations = jbar.kernel();

    let gen_classes: Vec<Vector> = gens
        .iter()
        .map(|f| conormal.class_of(f))
        .collect::<Result<_>>()?;
    // per relation: lifted entries and the classes of sum_j d_i(f_j) v_j in I/I^2
    let mut lifted = Vec::with_capacity(relations.len());
    for v in &relations {
        let lv: Vec<Poly> = v.chunks(d).map(|c| a.lift(c)).collect();
        let mut ring_terms = Vec::with_capacity(nv);
        for i in 0..nv {
            let mut p = Poly::zero(ideal.ring());
            for (col, l) in cols.iter().zip(&lv) {
                p = &p + &(&col[i] * l);
            }
            ring_terms.push(conormal.class_of(&p)?);
        }
        lifted.push((lv, ring_terms));
    }

    let mut constraint_cols = Vec::with_capacity(normal.dim());
    for b in 0..normal.dim() {
        let mut phi = vec![k.zero(); normal.dim()];
        phi[b] = k.one();
        let g: Vec<Poly> = gen_classes
            .iter()
            .map(|c| a.lift(&normal.apply(&phi, c)))
            .collect();
        let mut column = Vec::new();
        for (lv, ring_terms) in &lifted {
            let mut w = Vec::with_capacity(nv * d);
            for (i, terms) in ring_terms.iter().enumerate() {
                let mut p = Poly::zero(ideal.ring());
                for (gj, l) in g.iter().zip(lv) {
                    p = &p + &(&gj.derivative(i) * l);
                }
                let own = a.element_vector(&p)?;
                let ring = normal.apply(&phi, terms);
                w.extend(own.iter().zip(&ring).map(|(x, y)| x - y));
            }
            column.extend(image.quotient_coordinates(&w));
        }
        constraint_cols.push(column);
    }
    let rows = constraint_cols.first().map_or(0, Vec::len);
    let space = if rows == 0 {
        Subspace::full(k, normal.dim())
    } else {
        Subspace::span(
            k,
            normal.dim(),
            Matrix::from_columns(k, rows, &constraint_cols).kernel(),
        )
    };
    Ok(OmegaDeformations {
        algebra: a,
        conormal,
        normal,
        space,
        ideal: ideal.clone(),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SchemeInvariants {
    pub degree: usize,
    pub omega_degree: usize,
    pub tangent_degree: usize,
    pub normal_degree: usize,
}

pub fn scheme_invariants(ideal: &Ideal) -> Result<SchemeInvariants> {
    let a = quotient_algebra(ideal)?;
    let omega = omega_of(&a, ideal)?;
    let one = free_module(&a, 1)?;
    let tangent = hom_module(&omega, &one)?;
    let conormal = conormal_of(&a, ideal)?;
    let normal = hom_module(&conormal.module, &one)?;
    Ok(SchemeInvariants {
        degree: a.degree(),
        omega_degree: omega.dim(),
        tangent_degree: tangent.dim(),
        normal_degree: normal.dim(),
    })
}

/// Everything computed on the way to `q(X, Y)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QInvariant {
    pub q: BigRational,
    pub cokernel: usize,
    pub degree_z: usize,
    pub codim_y: usize,
    pub dim_x: usize,
    pub hom_conormal_x: usize,
    pub hom_normal_y: usize,
}

/// Relations `(a_t)` in `O_Z^s` with `sum a_t h_t` in `modulus`, as a
/// quotient of `O_Z^s`: the module generated by the `h_t` inside
/// `R/modulus`, which need not be finite dimensional itself.
fn generated_module(z: &Arc<ArtinAlgebra>, modulus: &Ideal, hs: &[Poly]) -> Result<FinModule> {
    let k = z.field();
    let free = free_module(z, hs.len())?;
    let mut support: Vec<Monomial> = Vec::new();
    let mut images: Vec<Vec<(Monomial, crate::ring::FieldElem)>> = Vec::new();
    for h in hs {
        for m in z.basis() {
            let nf = modulus.normal_form(&(&Poly::monomial(z.ring(), m.clone()) * h))?;
            support.extend(nf.terms().iter().map(|(m, _)| m.clone()));
            images.push(nf.into_terms());
        }
    }
    support.sort_by(|x, y| z.ring().order().cmp(x, y));
    support.dedup();
    let cols: Vec<Vector> = images
        .iter()
        .map(|terms| {
            let mut v = vec![k.zero(); support.len()];
            for (m, c) in terms {
                let at = support
                    .binary_search_by(|s| z.ring().order().cmp(s, m))
                    .expect("in support");
                v[at] = c.clone();
            }
            v
        })
        .collect();
    let relations = if support.is_empty() {
        Subspace::full(k, free.dim())
    } else {
        Subspace::span(
            k,
            free.dim(),
            Matrix::from_columns(k, support.len(), &cols).kernel(),
        )
    };
    Ok(quotient_by_subspace(&free, &relations)?.module)
}

/// `q(X, Y)` for ideals of `X` and `Y` in a common affine chart.
///
/// `deg coker(Hom(I_{Z/X}/I_{Z/X}^2, O_Z) -> Hom(I_Y/I_Y^2, O_Z))` divided by
/// `codim Y - dim X`, with `Z = X ∩ Y`. Both Hom modules are computed from
/// the generators of `I_Y`, which generate `I_{Z/X}` as well. If `dim_x` is
/// given it must agree with the Krull dimension of `R/I_X`.
pub fn q_invariant(ix: &Ideal, iy: &Ideal, dim_x: Option<usize>) -> Result<QInvariant> {
    if !crate::ring::same_ring(ix.ring(), iy.ring()) {
        return Err(Error::RingMismatch);
    }
    let computed = ix.krull_dimension()?;
    let dim_x = match dim_x {
        Some(declared) if declared != computed => {
            return Err(Error::DeclaredDimension { declared, computed })
        }
        _ => computed,
    };
    let codim_y = ix.ring().nvars() - iy.krull_dimension()?;
    let iz = ix.sum(iy)?;
    iz.require_zero_dimensional()?;
    if codim_y == dim_x {
        return Err(Error::ZeroDenominator);
    }
    if codim_y < dim_x {
        return Err(Error::NegativeDenominator { codim_y, dim_x });
    }
    let z = quotient_algebra(&iz)?;
    let one = free_module(&z, 1)?;
    let hs = iy.generators();
    let conormal_x = generated_module(&z, &ix.sum(&iz.power(2)?)?, hs)?;
    let normal_y = generated_module(&z, &iz.product(iy)?, hs)?;
    let h1 = hom_module(&conormal_x, &one)?.dim();
    let h2 = hom_module(&normal_y, &one)?.dim();
    // I_Y/I_Y^2 restricted to Z surjects onto I_{Z/X}/I^2, so h1 <= h2
    if h1 > h2 {
        return Err(Error::Precondition(
            "restriction map on Hom modules is not injective".into(),
        ));
    }
    let cokernel = h2 - h1;
    let q = BigRational::new(BigInt::from(cokernel), BigInt::from(codim_y - dim_x));
    Ok(QInvariant {
        q,
        cokernel,
        degree_z: z.degree(),
        codim_y,
        dim_x,
        hom_conormal_x: h1,
        hom_normal_y: h2,
    })
}

/// Whether reducedness can be read off from `omega_degree = 0`: only in
/// characteristic zero.
pub fn omega_detects_reducedness(field: FieldSpec) -> bool {
    field.characteristic() == 0
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{parse_poly, MonomialOrder, PolyRing};

    fn ideal(vars: &str, gens: &[&str]) -> Ideal {
        let r = PolyRing::parse_vars(FieldSpec::Rationals, vars, MonomialOrder::Grevlex).unwrap();
        Ideal::parse(&r, gens).unwrap()
    }

    fn corank_point(d: usize) -> Ideal {
        let names = ["a", "b", "c", "e", "f"][..d].join(" ");
        let r = PolyRing::parse_vars(FieldSpec::Rationals, &names, MonomialOrder::Grevlex).unwrap();
        Ideal::maximal_at_origin(&r).power(2).unwrap()
    }

    #[test]
    fn kaehler_examples() {
        assert_eq!(kaehler(&ideal("x y", &["x", "y"])).unwrap().dim(), 0);
        for m in 1..6 {
            let x = format!("x^{m}");
            assert_eq!(kaehler(&ideal("x", &[&x])).unwrap().dim(), m - 1);
        }
        for d in 1..5 {
            assert_eq!(kaehler(&corank_point(d)).unwrap().dim(), d * (d + 1) / 2);
        }
    }

    #[test]
    fn tangent_degrees() {
        assert_eq!(tangent_degree(&ideal("x y", &["x", "y"])).unwrap(), 0);
        for d in 1..4 {
            assert_eq!(tangent_degree(&corank_point(d)).unwrap(), d * d);
        }
    }

    #[test]
    fn conormal_and_normal() {
        let pt = ideal("x y", &["x", "y"]);
        assert_eq!(conormal(&pt).unwrap().module.dim(), 2);
        assert_eq!(normal_module(&pt).unwrap().dim(), 2);
        let fat = ideal("x y", &["x^2", "y"]);
        let c = conormal(&fat).unwrap();
        assert_eq!(c.module.dim(), 4);
        assert_eq!(c.outer_degree() - 2, 4);
        assert_eq!(normal_module(&fat).unwrap().dim(), 4);
        c.module.validate().unwrap();
    }

    #[test]
    fn reduced_point_deformations() {
        let d = deformations_fixing_omega(&ideal("x y", &["x", "y"])).unwrap();
        assert_eq!(d.dim(), 2);
        assert_eq!(d.normal.dim(), 2);
    }

    #[test]
    fn curvilinear_closure() {
        for m in 2..5usize {
            let x = format!("x^{m}");
            let d = deformations_fixing_omega(&ideal("x y", &[&x, "y"])).unwrap();
            assert_eq!(d.closure().unwrap().dim(), 2 * m - (m - 1), "m = {m}");
        }
    }

    #[test]
    fn translations_fix_omega() {
        let i = ideal("x y", &["x^3 - y^2", "x*y^2", "y^3"]);
        let d = deformations_fixing_omega(&i).unwrap();
        for v in 0..2 {
            let t = d.translation(v).unwrap();
            assert!(d.space.contains(&t));
        }
    }

    #[test]
    fn non_normal_vector_is_rejected() {
        let i = ideal("x", &["x^2"]);
        let d = deformations_fixing_omega(&i).unwrap();
        let r = i.ring();
        // x^2 -> 1 is fine, but a two-generator presentation with
        // inconsistent images is not
        assert!(d.normal_vector(&[Poly::one(r)]).unwrap().is_some());
        let j = ideal("x", &["x^2", "x^3"]);
        let dj = deformations_fixing_omega(&j).unwrap();
        let rj = j.ring();
        let bad = [Poly::zero(rj), Poly::one(rj)];
        assert!(dj.normal_vector(&bad).unwrap().is_none());
        let good = [Poly::one(rj), parse_poly("x", rj).unwrap()];
        assert!(dj.normal_vector(&good).unwrap().is_some());
    }

    #[test]
    fn q_for_lci_examples() {
        let r = PolyRing::parse_vars(FieldSpec::Rationals, "x y", MonomialOrder::Grevlex).unwrap();
        let x = Ideal::parse(&r, &["y - x^2"]).unwrap();
        let y = Ideal::parse(&r, &["x", "y"]).unwrap();
        let q = q_invariant(&x, &y, Some(1)).unwrap();
        assert_eq!(q.q, BigRational::from_integer(1.into()));
        let tangent = Ideal::parse(&r, &["x^2", "y"]).unwrap();
        let qt = q_invariant(&x, &tangent, None).unwrap();
        assert!(qt.q >= BigRational::from_integer(0.into()));
        assert_eq!(
            q_invariant(&x, &y, Some(0)).unwrap_err(),
            Error::DeclaredDimension {
                declared: 0,
                computed: 1
            }
        );
        let line = Ideal::parse(&r, &["y"]).unwrap();
        assert_eq!(
            q_invariant(&x, &line, None).unwrap_err(),
            Error::ZeroDenominator
        );
    }
}
