// Acceptance gate: eight exact-arithmetic criteria, one pass/fail line each.
// Exit status is the number of failed criteria.

#include <chrono>
#include <cstdio>
#include <exception>
#include <string>
#include <utility>
#include <vector>

#include "wmp/field.hpp"
#include "wmp/maya.hpp"
#include "wmp/multisym.hpp"
#include "wmp/partition.hpp"
#include "wmp/vertex.hpp"
#include "wmp/wreath.hpp"

#include "macdonald_oracle.hpp"

namespace {

using namespace wmp;
using Clock = std::chrono::steady_clock;

int g_failed = 0;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt_secs(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1fs", s);
  return buf;
}

template <typename Body>
void criterion(int num, const std::string& what, Body body) {
  bool ok = false;
  std::string detail;
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    ok = false;
    detail = std::string("exception: ") + e.what();
  }
  std::printf("[%s] criterion %d: %s%s\n", ok ? "PASS" : "FAIL", num, what.c_str(),
              detail.empty() ? "" : (" (" + detail + ")").c_str());
  std::fflush(stdout);
  if (!ok) ++g_failed;
}

bool report_ok(const CheckReport& rep, std::string& detail) {
  if (rep.pass()) return true;
  detail = rep.check + " " + rep.params + ": " + std::to_string(rep.failures.size()) +
           " mismatches, first at " + rep.failures.front().where;
  return false;
}

bool multisym_eq(const MultiSym& a, const MultiSym& b) {
  const MultiSym d = a - b;
  for (const auto& [mono, c] : d.terms()) {
    (void)mono;
    if (!field_eq(c, FieldElem::zero())) return false;
  }
  return true;
}

} // namespace

int main() {
  criterion(1, "defining axioms re-verified for every solved element", [](std::string& d) {
    const auto t0 = Clock::now();
    for (const auto& [l, cap] : std::vector<std::pair<int, int>>{{1, 3}, {2, 6}, {3, 6}}) {
      const CheckReport rep = verify_axioms(l, cap);
      if (!report_ok(rep, d)) return false;
    }
    const double secs = seconds_since(t0);
    if (secs >= 120.0) {
      d = "took " + fmt_secs(secs) + ", bound is 120s";
      return false;
    }
    d = fmt_secs(secs);
    return true;
  });

  criterion(2, "l=1 solver output matches the Gram-Schmidt Macdonald oracle",
            [](std::string& d) {
              for (int n = 0; n <= 4; ++n)
                for (const Partition& lam : all_partitions(n)) {
                  const MultiSym& got = wreath_h(lam, 1).h;
                  const MultiSym want = wmp_test::modified_macdonald(lam);
                  if (!multisym_eq(got, want)) {
                    d = "mismatch at lambda=" + lam.to_string();
                    return false;
                  }
                }
              return true;
            });

  criterion(3, "orthogonality and norms across empty-core blocks, l<=3",
            [](std::string& d) {
              for (int l : {1, 2, 3})
                for (int deg = 0; deg <= 3; ++deg) {
                  const CheckReport rep = verify_orthogonality(l, l * deg);
                  if (!report_ok(rep, d)) return false;
                }
              return true;
            });

  criterion(4, "multi-Schur and deformed Cauchy kernels to bidegree (2,2)",
            [](std::string& d) {
              for (int l : {1, 2, 3}) {
                if (!report_ok(verify_schur_cauchy(l, 2, Partition()), d)) return false;
                if (!report_ok(verify_wreath_cauchy(l, 2, Partition()), d)) return false;
              }
              const Partition one(std::vector<int>{1});
              if (!report_ok(verify_schur_cauchy(2, 2, one), d)) return false;
              if (!report_ok(verify_wreath_cauchy(2, 2, one), d)) return false;
              return true;
            });

  criterion(5, "principal evaluations and classical generating functions",
            [](std::string& d) {
              for (int l : {1, 2, 3})
                if (!report_ok(verify_evaluation(l, 3 * l), d)) return false;
              if (!report_ok(verify_classical_generating(1, 0, 2), d)) return false;
              if (!report_ok(verify_classical_generating(2, 0, 2), d)) return false;
              if (!report_ok(verify_classical_generating(2, 1, 2), d)) return false;
              return true;
            });

  criterion(6, "capped kernel coefficient: both routes, classical limit",
            [](std::string& d) {
              double l2s4 = 0.0;
              for (int l : {1, 2})
                for (int size : {l, 2 * l}) {
                  const auto t0 = Clock::now();
                  for (const Partition& lam : enumerate_with_core(size, l, Partition())) {
                    const VertexResult v = capped_vertex(lam, l, VertexRoute::both);
                    if (!v.routes_agree) {
                      d = "routes disagree at l=" + std::to_string(l) +
                          " lambda=" + lam.to_string();
                      return false;
                    }
                    if (!field_eq(v.classical, classical_descendant(lam, 0, l))) {
                      d = "classical limit differs at l=" + std::to_string(l) +
                          " lambda=" + lam.to_string();
                      return false;
                    }
                  }
                  if (l == 2 && size == 4) l2s4 = seconds_since(t0);
                }
              const FieldElem h = FieldElem::variable(Var::h);
              const FieldElem u = FieldElem::variable(Var::u);
              const FieldElem w = FieldElem::variable(Var::w);
              const FieldElem one = FieldElem::one();
              const FieldElem want = (h * (one + u) + w * (one + h * h * u)) / (h + w);
              const VertexResult v = capped_vertex(Partition(std::vector<int>{1}), 1);
              if (!field_eq(v.value, want)) {
                d = "one-box value is " + field_to_string(v.value);
                return false;
              }
              if (l2s4 >= 300.0) {
                d = "l=2 size-4 sweep took " + fmt_secs(l2s4) + ", bound is 300s";
                return false;
              }
              d = "l=2 size-4 sweep " + fmt_secs(l2s4);
              return true;
            });

  criterion(7, "fusion conjugation and kernel derivation identities",
            [](std::string& d) {
              for (int l : {1, 2}) {
                if (!report_ok(verify_abrr(l, 2), d)) return false;
                if (!report_ok(verify_derivation(l, 2), d)) return false;
              }
              return true;
            });

  criterion(8, "bead-diagram and core-quotient round trips", [](std::string& d) {
    const CoreQuotient cq = core_quotient(Partition(std::vector<int>{3, 2, 2, 1, 1, 1}), 3);
    if (cq.core.to_string() != "3,1" || cq.quotient.size() != 3 ||
        cq.quotient[0].to_string() != "" || cq.quotient[1].to_string() != "" ||
        cq.quotient[2].to_string() != "1,1") {
      d = "pinned example: core=(" + cq.core.to_string() + ")";
      return false;
    }
    for (int n = 0; n <= 10; ++n)
      for (const Partition& lam : all_partitions(n)) {
        const MayaDiagram m = maya_from_partition(lam);
        if (partition_from_maya(m) != lam) {
          d = "bead round trip fails at lambda=" + lam.to_string();
          return false;
        }
        for (int l : {2, 3, 4}) {
          if (maya_assemble(maya_slices(m, l)) != m) {
            d = "slice round trip fails at lambda=" + lam.to_string() +
                " l=" + std::to_string(l);
            return false;
          }
          if (from_core_quotient(core_quotient(lam, l)) != lam) {
            d = "core-quotient round trip fails at lambda=" + lam.to_string() +
                " l=" + std::to_string(l);
            return false;
          }
        }
      }
    return true;
  });

  std::printf("acceptance: %d of 8 criteria passed\n", 8 - g_failed);
  return g_failed;
}
