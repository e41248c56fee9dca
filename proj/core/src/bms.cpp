#include "minram/bms.hpp"

#include <atomic>
#include <optional>
#include <sstream>
#include <thread>
#include <vector>

#include "minram/errors.hpp"
#include "minram/resultant.hpp"

namespace minram {

std::string BmsScanStats::describe() const {
  std::ostringstream os;
  os << "pairs examined " << pairs_examined << ", rejected: r composite "
     << rejected_r_composite << ", galois " << rejected_galois << ", ramification "
     << rejected_ramification << ", inertia " << rejected_inertia;
  return os.str();
}

PolyZ bms_stem(int n, const BigInt& p, const BigInt& q) {
  if (n < 2) throw input_error("need n >= 2");
  std::vector<BigInt> coeffs(static_cast<size_t>(n) + 1);
  coeffs[static_cast<size_t>(n)] = 1;
  coeffs[static_cast<size_t>(n - 1)] = -q;
  coeffs[0] = -p * pow_ui(q, static_cast<unsigned long>(n - 1));
  return PolyZ(std::move(coeffs));
}

namespace {

struct PairOutcome {
  BigInt r;
  enum class Fail { none, r_composite, galois, ramification, inertia } fail = Fail::none;
  std::optional<GaloisCertificate> galois;
  std::optional<RamificationReport> ramification;
  bool inertia = false;
};

PairOutcome evaluate_pair(const BmsParams& params, const BigInt& p, const BigInt& q,
                          const BigInt& nn, const BigInt& mm) {
  PairOutcome out;
  out.r = nn * p + mm * q;
  Primality r_level = classify_prime(out.r);
  if (r_level == Primality::composite ||
      (params.require_proven && r_level != Primality::prime)) {
    out.fail = PairOutcome::Fail::r_composite;
    return out;
  }
  PolyZ stem = bms_stem(params.n, p, q);
  // The inertia shape is one cheap factorization mod r; test it before the
  // witness scan so required-inertia searches fail fast on most pairs.
  if (params.require_inertia) {
    out.inertia =
        discriminant(stem) % out.r == 0 && transposition_inertia_check(stem, out.r);
    if (!out.inertia) {
      out.fail = PairOutcome::Fail::inertia;
      return out;
    }
  }
  out.galois = galois_certify(stem, params.seed, params.prime_budget);
  if (out.galois->status != GaloisStatus::certified_sn) {
    out.fail = PairOutcome::Fail::galois;
    return out;
  }
  out.ramification = ramified_primes(stem);
  for (const FinitePlace& place : out.ramification->finite) {
    if (place.status != PlaceStatus::ramified) continue;
    if (place.prime != p && place.prime != q && place.prime != out.r) {
      out.fail = PairOutcome::Fail::ramification;
      return out;
    }
  }
  if (!params.require_inertia)
    out.inertia =
        out.ramification->disc % out.r == 0 && transposition_inertia_check(stem, out.r);
  return out;
}

}  // namespace

BmsTriple bms_search(const BmsParams& params) {
  if (params.n < 2) throw input_error("need n >= 2");
  if (params.p_max < 2 || params.q_max < 2)
    throw not_found_error("empty prime bounds for the (p, q) scan");
  const BigInt nn = pow_ui(BigInt(params.n), static_cast<unsigned long>(params.n));
  const BigInt mm = pow_ui(BigInt(params.n - 1), static_cast<unsigned long>(params.n - 1));

  std::vector<std::uint64_t> ps = primes_up_to(static_cast<std::uint64_t>(params.p_max));
  std::vector<std::uint64_t> qs = primes_up_to(static_cast<std::uint64_t>(params.q_max));
  if (ps.empty() || qs.empty()) throw not_found_error("empty prime bounds for the (p, q) scan");

  BmsScanStats stats;
  const int threads = std::max(1, params.threads);
  const size_t total = ps.size() * qs.size();
  const size_t wave_size = static_cast<size_t>(threads) * 8;

  for (size_t base = 0; base < total; base += wave_size) {
    const size_t end = std::min(total, base + wave_size);
    std::vector<PairOutcome> results(end - base);
    auto run = [&](size_t index) {
      BigInt p(ps[index / qs.size()]);
      BigInt q(qs[index % qs.size()]);
      results[index - base] = evaluate_pair(params, p, q, nn, mm);
    };
    if (threads == 1) {
      for (size_t i = base; i < end; ++i) run(i);
    } else {
      std::atomic<size_t> cursor{base};
      std::vector<std::exception_ptr> errors(static_cast<size_t>(threads));
      std::vector<std::thread> pool;
      for (int w = 0; w < threads; ++w)
        pool.emplace_back([&, w] {
          try {
            for (size_t i = cursor.fetch_add(1); i < end; i = cursor.fetch_add(1)) run(i);
          } catch (...) {
            errors[static_cast<size_t>(w)] = std::current_exception();
          }
        });
      for (auto& th : pool) th.join();
      for (const auto& err : errors)
        if (err) std::rethrow_exception(err);
    }
    for (size_t i = base; i < end; ++i) {
      PairOutcome& out = results[i - base];
      ++stats.pairs_examined;
      switch (out.fail) {
        case PairOutcome::Fail::r_composite: ++stats.rejected_r_composite; continue;
        case PairOutcome::Fail::galois: ++stats.rejected_galois; continue;
        case PairOutcome::Fail::ramification: ++stats.rejected_ramification; continue;
        case PairOutcome::Fail::inertia: ++stats.rejected_inertia; continue;
        case PairOutcome::Fail::none: break;
      }
      BmsTriple triple;
      triple.n = params.n;
      triple.p = BigInt(ps[i / qs.size()]);
      triple.q = BigInt(qs[i % qs.size()]);
      triple.r = std::move(out.r);
      if (triple.r != nn * triple.p + mm * triple.q)
        throw verification_error("triple relation failed re-check");
      triple.p_level = classify_prime(triple.p);
      triple.q_level = classify_prime(triple.q);
      triple.r_level = classify_prime(triple.r);
      std::vector<BigInt> qf(static_cast<size_t>(params.n) + 1);
      qf[static_cast<size_t>(params.n)] = triple.q;
      qf[static_cast<size_t>(params.n - 1)] = -triple.q;
      qf[0] = -triple.p;
      triple.qf = PolyZ(std::move(qf));
      triple.stem = bms_stem(params.n, triple.p, triple.q);
      triple.galois = std::move(*out.galois);
      triple.ramification = std::move(*out.ramification);
      triple.inertia_at_r = out.inertia;
      triple.stats = stats;
      return triple;
    }
  }
  throw not_found_error("(p, q) scan exhausted for n = " + std::to_string(params.n) +
                        " with p <= " + std::to_string(params.p_max) + ", q <= " +
                        std::to_string(params.q_max) + ": " + stats.describe());
}

}  // namespace minram
