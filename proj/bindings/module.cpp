/*
   Copyright 2026 the irredpoly authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// Python bindings. Everything is a stateless function over text forms, so
// no field-context lifetimes cross the language boundary. Polynomials use
// the same normative text format as the CLI.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <random>

#include "irredpoly/construct.hpp"
#include "irredpoly/oracle.hpp"
#include "irredpoly/record.hpp"

namespace py = pybind11;
using namespace irredpoly;

namespace {

Natural natural_from_py(const py::object& obj) {
    if (py::isinstance<py::int_>(obj)) return parse_natural(py::str(obj).cast<std::string>());
    if (py::isinstance<py::str>(obj)) return parse_natural(obj.cast<std::string>());
    throw InvalidInputError("expected an int or a decimal string");
}

SeededRng make_rng(const std::optional<std::uint64_t>& seed) {
    if (seed) return SeededRng(*seed);
    std::random_device rd;
    return SeededRng((static_cast<std::uint64_t>(rd()) << 32) ^ rd());
}

py::dict record_to_dict(const ConstructionRecord& rec) {
    py::dict d;
    d["p"] = natural_to_string(rec.p);
    d["k"] = rec.k;
    d["d"] = rec.d;
    d["modulus"] = rec.modulus_text ? py::object(py::str(*rec.modulus_text))
                                    : py::object(py::none());
    d["poly"] = rec.poly_text;
    d["verified"] = rec.verified;
    d["seeds_consumed"] = rec.seeds_consumed;
    d["version"] = rec.version;
    return d;
}

py::dict py_construct_record(const py::object& p, unsigned d, unsigned k,
                             const std::optional<std::string>& modulus,
                             const std::optional<std::uint64_t>& seed) {
    SeededRng rng = make_rng(seed);
    return record_to_dict(construct_record(natural_from_py(p), k, d, modulus, rng));
}

std::string py_construct(const py::object& p, unsigned d, unsigned k,
                         const std::optional<std::string>& modulus,
                         const std::optional<std::uint64_t>& seed) {
    SeededRng rng = make_rng(seed);
    return construct_record(natural_from_py(p), k, d, modulus, rng).poly_text;
}

std::pair<std::vector<std::string>, std::string> py_qnr_chain(
    const py::object& p, const std::optional<std::uint64_t>& seed) {
    const Fp P(natural_from_py(p));
    SeededRng rng = make_rng(seed);
    QnrResult res = canonical_qnr(P, rng);
    std::vector<std::string> chain;
    chain.reserve(res.chain.size());
    for (const auto& a : res.chain) chain.push_back(natural_to_string(a.v));
    return {std::move(chain), poly_to_text(res.poly)};
}

template <class F>
bool check_impl(const F& K, const std::string& poly) {
    Poly<F> f = poly_from_text(K, poly);
    if (f.degree() < 1 || !f.is_monic())
        throw InvalidInputError("polynomial must be monic of degree >= 1");
    return rabin_is_irreducible(f);
}

bool py_is_irreducible(const py::object& p, const std::string& poly, unsigned k,
                       const std::optional<std::string>& modulus) {
    const Fp P(natural_from_py(p));
    if (k == 1) return check_impl(P, poly);
    if (!modulus) throw InvalidInputError("k > 1 requires a modulus");
    Poly<Fp> h = poly_from_text(P, *modulus);
    const FpExt ctx(P, h);
    return check_impl(ctx, poly);
}

template <class F>
std::vector<std::string> factor_impl(const F& K, const std::string& poly, unsigned deg,
                                     SeededRng& rng) {
    Poly<F> f = poly_from_text(K, poly);
    std::vector<std::string> out;
    for (const auto& g : edf(f, deg, rng)) out.push_back(poly_to_text(g));
    return out;
}

std::vector<std::string> py_factor(const py::object& p, const std::string& poly, unsigned deg,
                                   unsigned k, const std::optional<std::string>& modulus,
                                   const std::optional<std::uint64_t>& seed) {
    const Fp P(natural_from_py(p));
    SeededRng rng = make_rng(seed);
    if (k == 1) return factor_impl(P, poly, deg, rng);
    if (!modulus) throw InvalidInputError("k > 1 requires a modulus");
    Poly<Fp> h = poly_from_text(P, *modulus);
    const FpExt ctx(P, h);
    return factor_impl(ctx, poly, deg, rng);
}

std::string py_random_irreducible(const py::object& p, unsigned d,
                                  const std::optional<std::uint64_t>& seed) {
    const Fp P(natural_from_py(p));
    SeededRng rng = make_rng(seed);
    return poly_to_text(random_irreducible(P, d, rng));
}

std::uint64_t py_count_irreducibles(const py::object& p, unsigned d) {
    const PrimeModulus prime(natural_from_py(p));
    // Counts stay far below 2^64 under the enumeration budget.
    return count_irreducibles(prime, d).get_ui();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Pseudo-deterministic canonical irreducible polynomials over finite fields";

    py::register_exception<InvalidInputError>(m, "InvalidInput", PyExc_ValueError);
    py::register_exception<BudgetExceededError>(m, "BudgetExceeded", PyExc_ValueError);
    py::register_exception<VerificationError>(m, "VerificationFailure", PyExc_RuntimeError);

    m.def("construct", &py_construct, py::arg("p"), py::arg("d"), py::arg("k") = 1,
          py::arg("modulus") = std::nullopt, py::arg("seed") = std::nullopt,
          "Canonical irreducible polynomial of degree d over F_{p^k}, as text.\n"
          "The output is independent of the seed; only runtimes vary.");
    m.def("construct_record", &py_construct_record, py::arg("p"), py::arg("d"),
          py::arg("k") = 1, py::arg("modulus") = std::nullopt, py::arg("seed") = std::nullopt,
          "Full construction record (dict) for (p, k, d).");
    m.def("qnr_chain", &py_qnr_chain, py::arg("p"), py::arg("seed") = std::nullopt,
          "Canonical quadratic non-residue chain in F_p and the certified\n"
          "quadratic irreducible; returns (chain, poly).");
    m.def("is_irreducible", &py_is_irreducible, py::arg("p"), py::arg("poly"),
          py::arg("k") = 1, py::arg("modulus") = std::nullopt,
          "Rabin irreducibility verdict for a monic polynomial.");
    m.def("factor", &py_factor, py::arg("p"), py::arg("poly"), py::arg("factor_degree"),
          py::arg("k") = 1, py::arg("modulus") = std::nullopt, py::arg("seed") = std::nullopt,
          "Equal-degree factorization; factors ascending in the normative order.");
    m.def("random_irreducible", &py_random_irreducible, py::arg("p"), py::arg("d"),
          py::arg("seed") = std::nullopt,
          "Trial-and-error random irreducible polynomial (baseline; not canonical).");
    m.def("count_irreducibles", &py_count_irreducibles, py::arg("p"), py::arg("d"),
          "Exact count of monic irreducible polynomials of degree d over F_p\n"
          "(exhaustive, budgeted; cross-checked against the necklace formula).");

    m.attr("__version__") = "0.1.0";
    m.attr("RECORD_FORMAT_VERSION") = kRecordFormatVersion;
}
