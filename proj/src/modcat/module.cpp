#include "cohfun/module.hpp"

#include <sstream>

namespace cohfun {

std::string CanonicalForm::str(const BaseRing& ring) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    if (free_rank > 0) {
        os << ring.name() << '^' << free_rank;
        first = false;
    }
    for (const auto& d : factors) {
        if (!first) os << " + ";
        os << "Z/" << d.get_str();
        first = false;
    }
    return os.str();
}

struct FpModule::Data {
    Matrix rels;
    SnfResult snf;
    CanonicalForm form;
    bool free_presentation;
};

FpModule::FpModule() : FpModule(Matrix(BaseRing::integers(), 0, 0)) {}

FpModule::FpModule(Matrix rels) {
    auto d = std::make_shared<Data>();
    d->snf = smith_normal_form(rels);
    const BaseRing& ring = rels.ring();
    d->form.free_rank = rels.rows() - d->snf.rank();
    for (const auto& x : d->snf.diag)
        if (!ring.is_unit(x)) d->form.factors.push_back(x);
    d->free_presentation = rels.is_zero();
    d->rels = std::move(rels);
    d_ = std::move(d);
}

FpModule FpModule::free(BaseRing ring, std::size_t n) { return FpModule(Matrix(ring, n, 0)); }

FpModule FpModule::cyclic(BaseRing ring, const Int& d) {
    Matrix rels(ring, 1, 1);
    rels.set(0, 0, d);
    return FpModule(std::move(rels));
}

FpModule FpModule::from_canonical(BaseRing ring, const CanonicalForm& form) {
    const std::size_t k = form.factors.size();
    Matrix rels(ring, k + form.free_rank, k);
    for (std::size_t i = 0; i < k; ++i) rels.set(i, i, form.factors[i]);
    return FpModule(std::move(rels));
}

const BaseRing& FpModule::ring() const { return d_->rels.ring(); }
std::size_t FpModule::gens() const { return d_->rels.rows(); }
const Matrix& FpModule::rels() const { return d_->rels; }
const SnfResult& FpModule::snf() const { return d_->snf; }
const CanonicalForm& FpModule::canonical() const { return d_->form; }
bool FpModule::has_free_presentation() const { return d_->free_presentation; }

Int FpModule::order() const {
    const auto& f = canonical();
    if (f.free_rank != 0) throw std::domain_error("order of an infinite module");
    Int n = 1;
    for (const auto& d : f.factors) n *= d;
    return n;
}

Int FpModule::summand_order(std::size_t i) const {
    const auto& diag = d_->snf.diag;
    return i < diag.size() ? diag[i] : Int(0);
}

bool FpModule::is_zero_element(const Matrix& x) const {
    if (x.rows() != gens()) throw std::invalid_argument("element has wrong number of coordinates");
    const BaseRing& r = ring();
    const auto& diag = d_->snf.diag;
    Matrix y = d_->snf.u * x;
    for (std::size_t i = 0; i < y.rows(); ++i) {
        for (std::size_t c = 0; c < y.cols(); ++c) {
            if (i < diag.size()) {
                if (!r.divides(diag[i], y(i, c))) return false;
            } else if (y(i, c) != 0) {
                return false;
            }
        }
    }
    return true;
}

bool operator==(const FpModule& a, const FpModule& b) { return a.d_ == b.d_ || a.d_->rels == b.d_->rels; }

// ---------------------------------------------------------------------------

ModMorphism::ModMorphism(FpModule source, FpModule target, Matrix mat)
    : source_(std::move(source)), target_(std::move(target)), mat_(std::move(mat)) {
    check_shape();
    if (!target_.is_zero_element(mat_ * source_.rels()))
        throw IllDefinedMorphism("ill-defined morphism: mat * rels_source is not in the span of rels_target");
}

ModMorphism::ModMorphism(FpModule source, FpModule target, Matrix mat, Trusted)
    : source_(std::move(source)), target_(std::move(target)), mat_(std::move(mat)) {
    check_shape();
}

void ModMorphism::check_shape() const {
    if (!(source_.ring() == target_.ring()) || !(mat_.ring() == source_.ring()))
        throw std::invalid_argument("morphism: ring mismatch");
    if (mat_.rows() != target_.gens() || mat_.cols() != source_.gens())
        throw std::invalid_argument("morphism: matrix is " + std::to_string(mat_.rows()) + "x" +
                                    std::to_string(mat_.cols()) + ", expected " + std::to_string(target_.gens()) +
                                    "x" + std::to_string(source_.gens()));
}

ModMorphism ModMorphism::identity(const FpModule& a) {
    return ModMorphism(a, a, Matrix::identity(a.ring(), a.gens()), Trusted{});
}

ModMorphism ModMorphism::zero(const FpModule& a, const FpModule& b) {
    return ModMorphism(a, b, Matrix(a.ring(), b.gens(), a.gens()), Trusted{});
}

ModMorphism ModMorphism::scaled(const Int& c) const { return ModMorphism(source_, target_, mat_.scaled(c), Trusted{}); }

ModMorphism ModMorphism::operator-() const { return ModMorphism(source_, target_, -mat_, Trusted{}); }

namespace {

void require_parallel(const ModMorphism& a, const ModMorphism& b) {
    if (!(a.source() == b.source()) || !(a.target() == b.target()))
        throw std::invalid_argument("morphisms do not share source and target");
}

}  // namespace

ModMorphism operator+(const ModMorphism& a, const ModMorphism& b) {
    require_parallel(a, b);
    return ModMorphism(a.source_, a.target_, a.mat_ + b.mat_, ModMorphism::Trusted{});
}

ModMorphism operator-(const ModMorphism& a, const ModMorphism& b) {
    require_parallel(a, b);
    return ModMorphism(a.source_, a.target_, a.mat_ - b.mat_, ModMorphism::Trusted{});
}

bool operator==(const ModMorphism& a, const ModMorphism& b) {
    require_parallel(a, b);
    return a.target_.is_zero_element(a.mat_ - b.mat_);
}

ModMorphism compose(const ModMorphism& psi, const ModMorphism& phi) {
    if (!(phi.target() == psi.source())) throw std::invalid_argument("compose: endpoints do not match");
    return ModMorphism(phi.source(), psi.target(), psi.mat() * phi.mat(), ModMorphism::Trusted{});
}

// ---------------------------------------------------------------------------

SubobjectData kernel_mor(const ModMorphism& phi) {
    const FpModule& a = phi.source();
    const FpModule& b = phi.target();
    const BaseRing& ring = a.ring();
    const std::size_t n = a.gens();

    // Preimage lattice {x : phi(x) = 0 in b}, projected from the solution
    // lattice of [mat | rels_b].
    LinearSolver solver(Matrix::hcat(phi.mat(), b.rels()));
    Matrix gens = solver.nullspace().row_range(0, n);
    SnfResult snf = smith_normal_form(gens);

    bool full = snf.rank() == n;
    for (const auto& d : snf.diag) full = full && ring.is_unit(d);
    if (full) return {a, ModMorphism::identity(a)};

    const std::size_t k = snf.rank();
    Matrix basis(ring, n, k);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < k; ++j) basis.set(i, j, snf.u_inv(i, j) * snf.diag[j]);
    if (!ring.is_field())
        for (std::size_t j = 0; j < k; ++j) {
            std::size_t lead = 0;
            while (lead < n && basis(lead, j) == 0) ++lead;
            if (lead < n && basis(lead, j) < 0)
                for (std::size_t i = lead; i < n; ++i) basis.set(i, j, -basis(i, j));
        }
    auto rels = LinearSolver(basis).solve(a.rels());
    if (!rels) throw std::logic_error("kernel_mor: source relations outside the preimage lattice");
    FpModule k_mod(std::move(*rels));
    return {k_mod, ModMorphism(k_mod, a, std::move(basis))};
}

QuotientData cokernel_mor(const ModMorphism& phi) {
    const FpModule& b = phi.target();
    FpModule c(Matrix::hcat(b.rels(), phi.mat()));
    return {c, ModMorphism(b, c, Matrix::identity(b.ring(), b.gens()), ModMorphism::Trusted{})};
}

SubobjectData image_mor(const ModMorphism& phi) { return kernel_mor(cokernel_mor(phi).projection); }

QuotientData coimage_mor(const ModMorphism& phi) { return cokernel_mor(kernel_mor(phi).inclusion); }

bool is_mono(const ModMorphism& phi) { return kernel_mor(phi).module.is_zero(); }

bool is_epi(const ModMorphism& phi) { return cokernel_mor(phi).module.is_zero(); }

FpModule tensor_module(const FpModule& a, const FpModule& b) {
    if (!(a.ring() == b.ring())) throw std::invalid_argument("tensor_module: ring mismatch");
    const BaseRing& ring = a.ring();
    Matrix left = Matrix::kron(a.rels(), Matrix::identity(ring, b.gens()));
    Matrix right = Matrix::kron(Matrix::identity(ring, a.gens()), b.rels());
    return FpModule(Matrix::hcat(left, right));
}

ModMorphism lift_through_epi(const ModMorphism& phi, const ModMorphism& e) {
    if (!phi.source().has_free_presentation()) throw std::invalid_argument("lift_through_epi: source is not free");
    if (!(phi.target() == e.target())) throw std::invalid_argument("lift_through_epi: targets differ");
    if (!is_epi(e)) throw std::invalid_argument("lift_through_epi: e is not an epimorphism");
    auto z = PreimageSolver(e)(phi.mat());
    if (!z) throw std::logic_error("lift_through_epi: no lift through an epimorphism");
    return ModMorphism(phi.source(), e.source(), std::move(*z), ModMorphism::Trusted{});
}

std::optional<ModMorphism> factor_through_mono(const ModMorphism& phi, const ModMorphism& m) {
    if (!(phi.target() == m.target())) throw std::invalid_argument("factor_through_mono: targets differ");
    auto z = PreimageSolver(m)(phi.mat());
    if (!z) return std::nullopt;
    return ModMorphism(phi.source(), m.source(), std::move(*z));
}

FreePresentation free_presentation(const FpModule& a) {
    const BaseRing& ring = a.ring();
    FpModule top = FpModule::free(ring, a.rels().cols());
    FpModule gens = FpModule::free(ring, a.gens());
    return {ModMorphism(top, gens, a.rels(), ModMorphism::Trusted{}),
            ModMorphism(gens, a, Matrix::identity(ring, a.gens()), ModMorphism::Trusted{})};
}

DirectSum direct_sum(const FpModule& a, const FpModule& b) {
    if (!(a.ring() == b.ring())) throw std::invalid_argument("direct_sum: ring mismatch");
    const BaseRing& ring = a.ring();
    const std::size_t na = a.gens(), nb = b.gens();
    FpModule s(Matrix::block_diag(a.rels(), b.rels()));
    Matrix i1 = Matrix::vcat(Matrix::identity(ring, na), Matrix(ring, nb, na));
    Matrix i2 = Matrix::vcat(Matrix(ring, na, nb), Matrix::identity(ring, nb));
    return {s,
            ModMorphism(a, s, i1, ModMorphism::Trusted{}),
            ModMorphism(b, s, i2, ModMorphism::Trusted{}),
            ModMorphism(s, a, i1.transpose(), ModMorphism::Trusted{}),
            ModMorphism(s, b, i2.transpose(), ModMorphism::Trusted{})};
}

ModMorphism pairing(const ModMorphism& a, const ModMorphism& b) {
    if (!(a.source() == b.source())) throw std::invalid_argument("pairing: sources differ");
    DirectSum sum = direct_sum(a.target(), b.target());
    return ModMorphism(a.source(), sum.module, Matrix::vcat(a.mat(), b.mat()), ModMorphism::Trusted{});
}

ModMorphism copairing(const ModMorphism& a, const ModMorphism& b) {
    if (!(a.target() == b.target())) throw std::invalid_argument("copairing: targets differ");
    DirectSum sum = direct_sum(a.source(), b.source());
    return ModMorphism(sum.module, a.target(), Matrix::hcat(a.mat(), b.mat()), ModMorphism::Trusted{});
}

Pushout pushout(const ModMorphism& a, const ModMorphism& b) {
    if (!(a.source() == b.source())) throw std::invalid_argument("pushout: sources differ");
    DirectSum sum = direct_sum(a.target(), b.target());
    Matrix rel = Matrix::vcat(a.mat(), -b.mat());
    FpModule d(Matrix::hcat(sum.module.rels(), rel));
    return {d, ModMorphism(a.target(), d, sum.inj1.mat(), ModMorphism::Trusted{}),
            ModMorphism(b.target(), d, sum.inj2.mat(), ModMorphism::Trusted{})};
}

PreimageSolver::PreimageSolver(const ModMorphism& phi)
    : source_gens_(phi.source().gens()), solver_(Matrix::hcat(phi.mat(), phi.target().rels())) {}

std::optional<Matrix> PreimageSolver::operator()(const Matrix& y) const {
    auto z = solver_.solve(y);
    if (!z) return std::nullopt;
    return z->row_range(0, source_gens_);
}

std::optional<std::string> exactness_defect(const std::vector<ModMorphism>& maps, bool zero_left, bool zero_right) {
    if (maps.empty()) return std::nullopt;
    if (zero_left && !is_mono(maps.front())) return std::string("not injective at the left end");
    for (std::size_t i = 1; i < maps.size(); ++i) {
        const ModMorphism& in = maps[i - 1];
        const ModMorphism& out = maps[i];
        if (!(in.target() == out.source())) throw std::invalid_argument("exactness_defect: maps not composable");
        if (!compose(out, in).is_zero()) return "composite nonzero at position " + std::to_string(i);
        Matrix kernel_gens = kernel_mor(out).inclusion.mat();
        if (!PreimageSolver(in)(kernel_gens)) return "kernel not contained in image at position " + std::to_string(i);
    }
    if (zero_right && !is_epi(maps.back())) return std::string("not surjective at the right end");
    return std::nullopt;
}

}  // namespace cohfun
