#include "comatrix/fixtures.hpp"

namespace comatrix {

namespace {

const Field F2 = Field::prime(2);

Expectation derived(std::string quantity, std::string value, std::string oracle) {
  return {std::move(quantity), std::move(value), std::move(oracle)};
}

}  // namespace

const std::string& Fixture::expect(const std::string& quantity) const {
  for (const auto& e : expected) {
    if (e.quantity == quantity) return e.value;
  }
  throw InvalidStructure("fixture " + name + " has no expectation '" + quantity + "'");
}

Fixture fixture_ex_free() {
  Fixture fx;
  fx.name = "EX-FREE";
  fx.a = ground_algebra(F2);
  fx.b = fx.a;
  Matrix id = Matrix::identity(F2, 2);
  fx.sigma = Bimodule(fx.b, fx.a, 2, {id}, {id});
  fx.expected = {
      derived("dim_c", "4", "tensor_rank"),
      derived("counit", "[[1 0 0 1]]", "counit_table"),
      derived("sub_bimodule_count", "67", "sub_bimodules"),
      derived("inv_order", "6", "sub_bimodules"),
      derived("inv_abelian", "false", "sub_bimodules"),
      derived("il_count", "6", "sub_bimodules"),
      derived("ir_count", "6", "sub_bimodules"),
      derived("affine_points", "4096", "coring_endomorphisms"),
      derived("end_order", "6", "coring_endomorphisms"),
      derived("aut_order", "6", "coring_endomorphisms"),
      derived("free_rank", "2", "free_basis"),
      derived("separable", "true", "separability"),
      derived("split", "true", "split_extension"),
  };
  return fx;
}

Fixture fixture_ex_sweedler() {
  Fixture fx;
  fx.name = "EX-SWEEDLER";
  AlgebraPtr s = matrix_algebra(F2, 2);
  Subalgebra d = subalgebra_spanned(s, {Matrix::column(F2, {1, 0, 0, 0}), Matrix::column(F2, {0, 0, 0, 1})});
  fx.a = s;
  fx.b = d.algebra;
  fx.sigma = restrict_left(regular_bimodule(s), d.inclusion);
  DualModule dual = right_dual(fx.sigma);
  fx.basis = dual_basis_from_generators(fx.sigma, dual, {s->unit()});
  fx.expected = {
      derived("dim_c", "8", "tensor_rank"),
      derived("inv_order", "2", "sub_bimodules"),
      derived("inv_abelian", "true", "sub_bimodules"),
      derived("sub_bimodule_count", "16", "sub_bimodules"),
      derived("il_count", "4", "sub_bimodules"),
      derived("ir_count", "4", "sub_bimodules"),
      derived("affine_points", "4", "coring_endomorphisms"),
      derived("end_order", "4", "coring_endomorphisms"),
      derived("aut_order", "2", "coring_endomorphisms"),
      derived("free_rank", "2", "free_basis"),
      derived("separable", "true", "separability"),
      derived("split", "true", "split_extension"),
  };
  return fx;
}

Fixture fixture_ex_sep() {
  Fixture fx;
  fx.name = "EX-SEP";
  AlgebraPtr k = ground_algebra(F2);
  fx.a = product_algebra(k, k);
  fx.b = k;
  fx.sigma = restrict_left(regular_bimodule(fx.a), AlgebraMorphism{k, fx.a, fx.a->unit()});
  fx.expected = {
      derived("dim_c", "4", "tensor_rank"),
      derived("sub_bimodule_count", "5", "sub_bimodules"),
      derived("inv_order", "1", "sub_bimodules"),
      derived("inv_abelian", "true", "sub_bimodules"),
      derived("il_count", "1", "sub_bimodules"),
      derived("ir_count", "1", "sub_bimodules"),
      derived("affine_points", "4", "coring_endomorphisms"),
      derived("end_order", "1", "coring_endomorphisms"),
      derived("aut_order", "1", "coring_endomorphisms"),
      derived("free_rank", "2", "free_basis"),
      derived("separable", "true", "separability"),
      derived("split", "true", "split_extension"),
  };
  return fx;
}

std::vector<Fixture> all_fixtures() { return {fixture_ex_free(), fixture_ex_sweedler(), fixture_ex_sep()}; }

std::optional<Fixture> fixture_by_name(const std::string& name) {
  for (auto& fx : all_fixtures()) {
    if (fx.name == name) return fx;
  }
  return std::nullopt;
}

CheckReport reseed_check(const Fixture& fx) {
  CheckReport report;
  report.subject = "oracles of " + fx.name;
  for (const auto& e : fx.expected) {
    ++report.checked;
    std::string got = run_oracle(fx, e.oracle + ":" + e.quantity);
    if (got != e.value) report.fail(e.quantity, "oracle " + e.oracle + " gives " + got + ", stored " + e.value);
  }
  return report;
}

}  // namespace comatrix
