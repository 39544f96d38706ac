// Serial vs OpenMP comparison for the exhaustive-search kernels. Every kernel
// runs in both modes on the same ring; results must agree exactly.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "qduo/checkers.hpp"
#include "qduo/descriptor.hpp"
#include "qduo/kernels.hpp"

namespace {

using Clock = std::chrono::steady_clock;
using qduo::ElementSet;
using qduo::FiniteRing;
using qduo::RingPtr;
using qduo::kernels::Exec;

template <class Fn>
double time_ms(unsigned repeat, Fn&& fn) {
  double best = 1e100;
  for (unsigned i = 0; i < repeat; ++i) {
    const auto start = Clock::now();
    fn();
    const double ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    if (ms < best) best = ms;
  }
  return best;
}

struct Row {
  std::string ring, kernel;
  std::size_t order;
  double serial_ms, parallel_ms;
  bool match;
};

void run_kernel(std::vector<Row>& rows, const std::string& id, const FiniteRing& ring,
                const std::string& kernel, unsigned repeat) {
  const ElementSet units_s = qduo::kernels::units(ring, Exec::serial);
  Row row{id, kernel, ring.order(), 0, 0, true};
  if (kernel == "units") {
    ElementSet a, b;
    row.serial_ms = time_ms(repeat, [&] { a = qduo::kernels::units(ring, Exec::serial); });
    row.parallel_ms = time_ms(repeat, [&] { b = qduo::kernels::units(ring, Exec::parallel); });
    row.match = a == b;
  } else if (kernel == "qnil") {
    ElementSet a, b;
    row.serial_ms = time_ms(repeat, [&] { a = qduo::kernels::qnil_set(ring, units_s, Exec::serial); });
    row.parallel_ms =
        time_ms(repeat, [&] { b = qduo::kernels::qnil_set(ring, units_s, Exec::parallel); });
    row.match = a == b;
  } else if (kernel == "jacobson") {
    ElementSet a, b;
    row.serial_ms =
        time_ms(repeat, [&] { a = qduo::kernels::jacobson_radical(ring, units_s, Exec::serial); });
    row.parallel_ms =
        time_ms(repeat, [&] { b = qduo::kernels::jacobson_radical(ring, units_s, Exec::parallel); });
    row.match = a == b;
  } else if (kernel == "normality") {
    const ElementSet q = qduo::kernels::qnil_set(ring, units_s, Exec::serial);
    std::optional<std::array<qduo::Elem, 2>> a, b;
    row.serial_ms = time_ms(repeat, [&] {
      a = qduo::kernels::normality_violation(ring, q, qduo::kernels::Side::right, Exec::serial);
    });
    row.parallel_ms = time_ms(repeat, [&] {
      b = qduo::kernels::normality_violation(ring, q, qduo::kernels::Side::right, Exec::parallel);
    });
    row.match = a == b;
  } else if (kernel == "sr1") {
    std::optional<std::array<qduo::Elem, 2>> a, b;
    row.serial_ms = time_ms(
        repeat, [&] { a = qduo::kernels::stable_range_one_violation(ring, units_s, Exec::serial); });
    row.parallel_ms = time_ms(
        repeat, [&] { b = qduo::kernels::stable_range_one_violation(ring, units_s, Exec::parallel); });
    row.match = a == b;
  } else if (kernel == "axioms") {
    qduo::kernels::AxiomReport a, b;
    const std::size_t cap = ring.order();
    row.serial_ms = time_ms(repeat, [&] { a = qduo::kernels::verify_axioms(ring, cap, Exec::serial); });
    row.parallel_ms =
        time_ms(repeat, [&] { b = qduo::kernels::verify_axioms(ring, cap, Exec::parallel); });
    row.match = a.status == b.status;
  } else {
    throw std::invalid_argument("unknown kernel \"" + kernel + "\"");
  }
  rows.push_back(row);
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> ring_ids{"m2-z4", "k0-z4", "h11-z4", "l11-z4"};
  std::vector<std::string> kernels{"units", "qnil", "jacobson", "normality", "sr1"};
  unsigned repeat = 3;

  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    auto split = [](const std::string& csv) {
      std::vector<std::string> out;
      std::stringstream ss(csv);
      std::string tok;
      while (std::getline(ss, tok, ',')) out.push_back(tok);
      return out;
    };
    if (arg == "--smoke") {
      ring_ids = {"z4", "m2-z2"};
      kernels = {"units", "qnil", "jacobson", "normality", "sr1", "axioms"};
      repeat = 1;
    } else if (arg == "--rings" && i + 1 < argc) {
      ring_ids = split(argv[++i]);
    } else if (arg == "--kernels" && i + 1 < argc) {
      kernels = split(argv[++i]);
    } else if (arg == "--repeat" && i + 1 < argc) {
      repeat = static_cast<unsigned>(std::stoul(argv[++i]));
    } else {
      std::cerr << "usage: qduo_bench [--smoke] [--rings id,id] [--kernels k1,k2] [--repeat N]\n";
      return 2;
    }
  }

  std::printf("threads: %d (OpenMP %s)\n", qduo::kernels::thread_count(),
              qduo::kernels::parallel_available() ? "on" : "off");
  std::printf("%-12s %-22s %8s %12s %12s %8s %s\n", "ring", "kernel", "order", "serial ms",
              "parallel ms", "speedup", "match");

  std::vector<Row> rows;
  bool all_match = true;
  for (const auto& id : ring_ids) {
    RingPtr ring = qduo::rings::builtin(id);
    for (const auto& k : kernels) run_kernel(rows, id, *ring, k, repeat);
  }
  for (const auto& r : rows) {
    all_match = all_match && r.match;
    std::printf("%-12s %-22s %8zu %12.2f %12.2f %8.2f %s\n", r.ring.c_str(), r.kernel.c_str(),
                r.order, r.serial_ms, r.parallel_ms,
                r.parallel_ms > 0 ? r.serial_ms / r.parallel_ms : 0.0,
                r.match ? "yes" : "NO");
  }
  if (!all_match) {
    std::fprintf(stderr, "serial and parallel kernels disagree\n");
    return 1;
  }
  return 0;
}
