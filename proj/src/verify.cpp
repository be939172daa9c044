#include "insdel/verify.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

namespace insdel {

std::uint64_t agreement_count(std::span<const std::uint32_t> left,
                              std::span<const std::uint32_t> right) {
  if (left.size() != right.size()) {
    throw std::invalid_argument("index vectors must have equal length");
  }
  std::uint64_t count = 0;
  for (std::size_t t = 0; t < left.size(); ++t) count += left[t] == right[t];
  return count;
}

namespace {

void require_increasing_in_range(std::span<const std::uint32_t> v, std::size_t n,
                                 std::size_t expected_len) {
  if (v.size() != expected_len) {
    throw std::invalid_argument("index vector length must be 2k-1");
  }
  std::uint32_t prev = 0;
  for (std::uint32_t x : v) {
    if (x < 1 || x > n) throw std::out_of_range("index outside [1, n]");
    if (x <= prev) throw std::invalid_argument("index vector must be strictly increasing");
    prev = x;
  }
}

void require_valid_pair(const RsCode& code, const IndexPair& pair) {
  const std::size_t s = 2 * static_cast<std::size_t>(code.dimension()) - 1;
  require_increasing_in_range(pair.left, code.length(), s);
  require_increasing_in_range(pair.right, code.length(), s);
}

TowerElem gauss_det(const TowerField& t, std::vector<TowerElem>& m, std::size_t s) {
  bool negate = false;
  TowerElem det = t.one();
  const TowerElem zero = t.zero();
  for (std::size_t col = 0; col < s; ++col) {
    std::size_t piv = col;
    while (piv < s && m[piv * s + col] == zero) ++piv;
    if (piv == s) return zero;
    if (piv != col) {
      for (std::size_t c = col; c < s; ++c) std::swap(m[piv * s + c], m[col * s + c]);
      negate = !negate;
    }
    const TowerElem pval = m[col * s + col];
    det = t.mul(det, pval);
    const TowerElem pinv = t.inv(pval);
    for (std::size_t r = col + 1; r < s; ++r) {
      if (m[r * s + col] == zero) continue;
      TowerElem factor = t.mul(m[r * s + col], pinv);
      for (std::size_t c = col; c < s; ++c) {
        m[r * s + c] = t.sub(m[r * s + c], t.mul(factor, m[col * s + c]));
      }
    }
  }
  return negate ? t.neg(det) : det;
}

// Advance a strictly increasing 0-based combination; false when exhausted.
bool next_combination(std::vector<std::uint32_t>& c, std::uint32_t n) {
  const std::size_t s = c.size();
  for (std::size_t i = s; i-- > 0;) {
    if (c[i] < n - (s - i)) {
      ++c[i];
      for (std::size_t j = i + 1; j < s; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

std::vector<std::uint32_t> to_one_based(std::span<const std::uint32_t> zero_based) {
  std::vector<std::uint32_t> out(zero_based.begin(), zero_based.end());
  for (std::uint32_t& x : out) ++x;
  return out;
}

struct ScanResult {
  std::uint64_t pairs = 0;
  std::uint64_t violations = 0;
  std::optional<Violation> first;
  std::vector<Violation> collected;
};

struct ScanTask {
  unsigned tid = 0;
  unsigned threads = 1;
  std::uint64_t collect_limit = 0;  // how many violations to keep
  bool stop_at_collect_limit = false;
  bool stop_on_first_violation = false;
};

// Shared bookkeeping for one discovered violation. Returns true if the scan
// should stop.
bool record_violation(ScanResult& out, const ScanTask& task,
                      std::vector<std::uint32_t> left, std::vector<std::uint32_t> right,
                      TowerElem det) {
  ++out.violations;
  if (!out.first) out.first = Violation{left, right, det};
  if (out.collected.size() < task.collect_limit) {
    out.collected.push_back(Violation{std::move(left), std::move(right), det});
  }
  if (task.stop_on_first_violation) return true;
  if (task.stop_at_collect_limit && out.collected.size() >= task.collect_limit) return true;
  return false;
}

// k = 2 scan: det V_{I,J} = (b_{I1}-b_{I2})(b_{J2}-b_{J3}) - (b_{I2}-b_{I3})(b_{J1}-b_{J2}),
// evaluated over precomputed pairwise differences.
ScanResult scan_k2(const RsCode& code, const ScanTask& task) {
  const TowerField& t = code.tower();
  const std::uint32_t n = static_cast<std::uint32_t>(code.length());
  const std::span<const TowerElem> alpha = code.alpha();
  const TowerElem zero = t.zero();

  std::vector<TowerElem> diff(static_cast<std::size_t>(n) * n);
  for (std::uint32_t a = 0; a < n; ++a) {
    for (std::uint32_t b = a + 1; b < n; ++b) {
      diff[a * n + b] = t.sub(alpha[a], alpha[b]);
    }
  }
  auto d = [&](std::uint32_t a, std::uint32_t b) { return diff[a * n + b]; };

  ScanResult out;
  std::uint64_t rank = 0;
  for (std::uint32_t i1 = 0; i1 + 2 < n; ++i1) {
    for (std::uint32_t i2 = i1 + 1; i2 + 1 < n; ++i2) {
      const TowerElem q12 = d(i1, i2);
      for (std::uint32_t i3 = i2 + 1; i3 < n; ++i3) {
        if (rank++ % task.threads != task.tid) continue;
        const TowerElem r23 = d(i2, i3);
        for (std::uint32_t j1 = 0; j1 + 2 < n; ++j1) {
          const unsigned a1 = j1 == i1;
          for (std::uint32_t j2 = j1 + 1; j2 + 1 < n; ++j2) {
            const unsigned a2 = a1 + (j2 == i2);
            if (a2 == 2) continue;
            const TowerElem p = t.mul(r23, d(j1, j2));
            for (std::uint32_t j3 = j2 + 1; j3 < n; ++j3) {
              if (a2 == 1 && j3 == i3) continue;
              ++out.pairs;
              TowerElem det = t.sub(t.mul(q12, d(j2, j3)), p);
              if (det == zero) {
                if (record_violation(out, task, {i1 + 1, i2 + 1, i3 + 1},
                                     {j1 + 1, j2 + 1, j3 + 1}, det)) {
                  return out;
                }
              }
            }
          }
        }
      }
    }
  }
  return out;
}

ScanResult scan_generic(const RsCode& code, const ScanTask& task) {
  const TowerField& t = code.tower();
  const std::uint32_t n = static_cast<std::uint32_t>(code.length());
  const unsigned k = code.dimension();
  const std::size_t s = 2 * static_cast<std::size_t>(k) - 1;
  const TowerElem zero = t.zero();

  // powers[i * k + m] = alpha_i^m for m < k
  std::vector<TowerElem> powers(static_cast<std::size_t>(n) * k);
  for (std::uint32_t i = 0; i < n; ++i) {
    powers[i * k] = t.one();
    for (unsigned m = 1; m < k; ++m) {
      powers[i * k + m] = t.mul(powers[i * k + m - 1], code.alpha()[i]);
    }
  }

  std::vector<TowerElem> work(s * s);
  ScanResult out;
  std::uint64_t rank = 0;

  std::vector<std::uint32_t> I(s);
  for (std::size_t i = 0; i < s; ++i) I[i] = static_cast<std::uint32_t>(i);
  do {
    if (rank++ % task.threads != task.tid) continue;
    std::vector<std::uint32_t> J(s);
    for (std::size_t i = 0; i < s; ++i) J[i] = static_cast<std::uint32_t>(i);
    do {
      unsigned agree = 0;
      for (std::size_t i = 0; i < s; ++i) agree += I[i] == J[i];
      if (agree > k - 1) continue;
      for (std::size_t r = 0; r < s; ++r) {
        work[r * s] = t.one();
        for (unsigned m = 1; m < k; ++m) {
          work[r * s + m] = powers[I[r] * k + m];
          work[r * s + k - 1 + m] = powers[J[r] * k + m];
        }
      }
      ++out.pairs;
      TowerElem det = gauss_det(t, work, s);
      if (det == zero) {
        if (record_violation(out, task, to_one_based(I), to_one_based(J), det)) return out;
      }
    } while (next_combination(J, n));
  } while (next_combination(I, n));
  return out;
}

ScanResult scan(const RsCode& code, const ScanTask& task) {
  return code.dimension() == 2 ? scan_k2(code, task) : scan_generic(code, task);
}

}  // namespace

SquareMatrix condition_matrix(const RsCode& code, const IndexPair& pair) {
  require_valid_pair(code, pair);
  const TowerField& t = code.tower();
  const unsigned k = code.dimension();
  const std::size_t s = 2 * static_cast<std::size_t>(k) - 1;
  SquareMatrix m(s);
  for (std::size_t r = 0; r < s; ++r) {
    TowerElem xi = code.alpha()[pair.left[r] - 1];
    TowerElem xj = code.alpha()[pair.right[r] - 1];
    m.at(r, 0) = t.one();
    TowerElem pi = t.one(), pj = t.one();
    for (unsigned p = 1; p < k; ++p) {
      pi = t.mul(pi, xi);
      pj = t.mul(pj, xj);
      m.at(r, p) = pi;
      m.at(r, k - 1 + p) = pj;
    }
  }
  return m;
}

TowerElem determinant(const TowerField& tower, SquareMatrix m) {
  const std::size_t s = m.order();
  std::vector<TowerElem> flat(s * s);
  for (std::size_t r = 0; r < s; ++r) {
    for (std::size_t c = 0; c < s; ++c) flat[r * s + c] = m.at(r, c);
  }
  return gauss_det(tower, flat, s);
}

VerificationReport verify_code(const RsCode& code, const VerifyOptions& options) {
  const std::uint64_t n = code.length();
  const unsigned k = code.dimension();
  if (n + 1 < 2 * static_cast<std::uint64_t>(k)) {
    throw std::invalid_argument("verification requires n >= 2k - 1");
  }
  const auto start = std::chrono::steady_clock::now();

  ScanResult merged;
  unsigned threads = options.threads == 0 ? 1 : options.threads;
  if (options.stop_on_first) threads = 1;  // early stop stays sequential

  if (threads == 1) {
    ScanTask task;
    task.stop_on_first_violation = options.stop_on_first;
    merged = scan(code, task);
  } else {
    std::vector<ScanResult> results(threads);
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned tid = 0; tid < threads; ++tid) {
      pool.emplace_back([&, tid] {
        ScanTask task;
        task.tid = tid;
        task.threads = threads;
        results[tid] = scan(code, task);
      });
    }
    for (std::thread& th : pool) th.join();
    for (ScanResult& r : results) {
      merged.pairs += r.pairs;
      merged.violations += r.violations;
      if (r.first) {
        if (!merged.first ||
            std::pair(r.first->left, r.first->right) < std::pair(merged.first->left, merged.first->right)) {
          merged.first = std::move(r.first);
        }
      }
    }
  }

  VerificationReport report;
  report.passed = merged.violations == 0;
  report.pairs_checked = merged.pairs;
  report.violations_found = merged.violations;
  report.first_violation = std::move(merged.first);
  report.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - start);
  return report;
}

std::vector<Violation> enumerate_violations(const RsCode& code, std::uint64_t limit) {
  if (limit < 1) throw std::invalid_argument("witness limit must be at least 1");
  const std::uint64_t n = code.length();
  if (n + 1 < 2 * static_cast<std::uint64_t>(code.dimension())) {
    throw std::invalid_argument("verification requires n >= 2k - 1");
  }
  ScanTask task;
  task.collect_limit = limit;
  task.stop_at_collect_limit = true;
  return scan(code, task).collected;
}

ProofCoefficients coefficient_decomposition(const RsCode& code, const IndexPair& pair) {
  if (code.dimension() != 2) {
    throw std::invalid_argument("coefficient decomposition is defined for k = 2");
  }
  if (!code.provenance()) {
    throw std::invalid_argument("coefficient decomposition needs construction provenance");
  }
  require_valid_pair(code, pair);
  const BaseField& b = code.tower().base();
  const DeltaSet& prov = *code.provenance();
  auto delta = [&](std::uint32_t idx) { return prov.elements[idx - 1]; };
  auto slope = [&](BaseElem d) {
    return prov.kind == ConstructionKind::InverseGamma ? b.inv(d) : b.mul(d, d);
  };

  const BaseElem d1 = delta(pair.left[0]), d2 = delta(pair.left[1]), d3 = delta(pair.left[2]);
  const BaseElem d4 = delta(pair.right[0]), d5 = delta(pair.right[1]), d6 = delta(pair.right[2]);
  const BaseElem u1 = slope(d1), u2 = slope(d2), u3 = slope(d3);
  const BaseElem u4 = slope(d4), u5 = slope(d5), u6 = slope(d6);

  auto sub = [&](BaseElem x, BaseElem y) { return b.sub(x, y); };
  auto mul = [&](BaseElem x, BaseElem y) { return b.mul(x, y); };

  ProofCoefficients out;
  out.p0 = sub(mul(sub(d1, d2), sub(d5, d6)), mul(sub(d2, d3), sub(d4, d5)));
  out.p1 = sub(sub(b.add(mul(sub(d1, d2), sub(u5, u6)), mul(sub(u1, u2), sub(d5, d6))),
                   mul(sub(u2, u3), sub(d4, d5))),
               mul(sub(d2, d3), sub(u4, u5)));
  out.p2 = sub(mul(sub(u1, u2), sub(u5, u6)), mul(sub(u2, u3), sub(u4, u5)));
  return out;
}

}  // namespace insdel
