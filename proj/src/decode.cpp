#include "insdel/decode.hpp"

#include "insdel/channel.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <set>
#include <stdexcept>
#include <thread>

namespace insdel {

namespace {

constexpr std::uint64_t kOracleGuard = 1'000'000;

std::array<std::uint64_t, 6> message_key(const MessagePoly& m) {
  return {m.coeffs[0].c0.n, m.coeffs[0].c1.n, m.coeffs[0].c2.n,
          m.coeffs[1].c0.n, m.coeffs[1].c1.n, m.coeffs[1].c2.n};
}

std::uint64_t guarded_message_count(const RsCode& code) {
  const std::uint64_t q = code.tower().base().size();
  unsigned __int128 field = static_cast<unsigned __int128>(q) * q * q;
  unsigned __int128 count = 1;
  for (unsigned i = 0; i < code.dimension(); ++i) {
    count *= field;
    if (count > kOracleGuard) {
      throw std::domain_error("message space exceeds the exhaustive-search guard");
    }
  }
  return static_cast<std::uint64_t>(count);
}

MessagePoly message_from_index(const RsCode& code, std::uint64_t index) {
  const TowerField& t = code.tower();
  const std::uint64_t q = t.base().size();
  const std::uint64_t field = q * q * q;
  MessagePoly msg;
  msg.coeffs.reserve(code.dimension());
  for (unsigned i = 0; i < code.dimension(); ++i) {
    msg.coeffs.push_back(t.from_int(index % field));
    index /= field;
  }
  return msg;
}

}  // namespace

DecodeResult decode_k2(const RsCode& code, const Word& received) {
  if (code.dimension() != 2) throw std::invalid_argument("decoder requires a k = 2 code");
  const TowerField& t = code.tower();
  for (TowerElem sym : received) {
    if (!t.contains(sym)) throw std::invalid_argument("received symbol outside the field");
  }
  const std::size_t n = code.length();
  const std::size_t radius = decoding_radius(n, 2);
  const std::size_t m = received.size();

  DecodeResult result;
  if (m < 2) return result;  // no interpolation pairs; under the radius promise m >= 3

  const std::span<const TowerElem> alpha = code.alpha();
  // inv_diff[i * n + j] = (alpha_j - alpha_i)^-1 for i < j
  std::vector<TowerElem> inv_diff(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      inv_diff[i * n + j] = t.inv(t.sub(alpha[j], alpha[i]));
    }
  }

  std::set<std::array<std::uint64_t, 6>> seen;
  std::vector<MessagePoly> accepted;
  Word candidate_word(n);
  for (std::size_t s = 0; s < m; ++s) {
    for (std::size_t u = s + 1; u < m; ++u) {
      const TowerElem dy = t.sub(received[u], received[s]);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
          const TowerElem f1 = t.mul(dy, inv_diff[i * n + j]);
          const TowerElem f0 = t.sub(received[s], t.mul(f1, alpha[i]));
          MessagePoly msg{{f0, f1}};
          if (!seen.insert(message_key(msg)).second) continue;
          for (std::size_t v = 0; v < n; ++v) {
            candidate_word[v] = t.add(f0, t.mul(f1, alpha[v]));
          }
          if (insdel_distance(candidate_word, received) <= radius) {
            accepted.push_back(std::move(msg));
          }
        }
      }
    }
  }

  std::sort(accepted.begin(), accepted.end(),
            [](const MessagePoly& a, const MessagePoly& b) { return message_key(a) < message_key(b); });
  result.candidates = std::move(accepted);
  if (result.candidates.size() == 1) {
    result.outcome = DecodeResult::Outcome::Decoded;
  } else if (result.candidates.empty()) {
    result.outcome = DecodeResult::Outcome::TooManyErrors;
  } else {
    result.outcome = DecodeResult::Outcome::AmbiguityDetected;
  }
  return result;
}

ExhaustiveOracle::ExhaustiveOracle(RsCode code)
    : code_(std::move(code)), message_count_(guarded_message_count(code_)) {
  const TowerField& t = code_.tower();
  const std::size_t n = code_.length();
  codewords_.resize(message_count_ * n);
  for (std::uint64_t idx = 0; idx < message_count_; ++idx) {
    Word w = code_.encode(message_from_index(code_, idx));
    for (std::size_t v = 0; v < n; ++v) codewords_[idx * n + v] = t.to_int(w[v]);
  }
}

MessagePoly ExhaustiveOracle::message_at(std::uint64_t index) const {
  if (index >= message_count_) throw std::out_of_range("message index out of range");
  return message_from_index(code_, index);
}

DecodeResult ExhaustiveOracle::decode(const Word& received) const {
  const TowerField& t = code_.tower();
  const std::size_t n = code_.length();
  const std::size_t radius = decoding_radius(n, code_.dimension());
  std::vector<std::uint64_t> y;
  y.reserve(received.size());
  for (TowerElem sym : received) y.push_back(t.to_int(sym));

  DecodeResult result;
  for (std::uint64_t idx = 0; idx < message_count_; ++idx) {
    std::span<const std::uint64_t> cw(codewords_.data() + idx * n, n);
    if (insdel_distance(cw, std::span<const std::uint64_t>(y)) <= radius) {
      result.candidates.push_back(message_from_index(code_, idx));
    }
  }
  if (result.candidates.size() == 1) {
    result.outcome = DecodeResult::Outcome::Decoded;
  } else if (result.candidates.empty()) {
    result.outcome = DecodeResult::Outcome::TooManyErrors;
  } else {
    result.outcome = DecodeResult::Outcome::AmbiguityDetected;
  }
  return result;
}

DecodeResult oracle_decode(const RsCode& code, const Word& received) {
  return ExhaustiveOracle(code).decode(received);
}

ConfusabilityResult confusability_check(const RsCode& code, std::uint64_t t, unsigned threads) {
  const std::uint64_t count = guarded_message_count(code);
  const TowerField& tower = code.tower();
  const std::size_t n = code.length();
  std::vector<std::uint64_t> codewords(count * n);
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    Word w = code.encode(message_from_index(code, idx));
    for (std::size_t v = 0; v < n; ++v) codewords[idx * n + v] = tower.to_int(w[v]);
  }
  auto word_at = [&](std::uint64_t idx) {
    return std::span<const std::uint64_t>(codewords.data() + idx * n, n);
  };

  if (t == 0) {
    // lcs(a, b) = n for length-n words iff a = b, so radius-0 confusability
    // is duplicate detection. Evaluation points are distinct, hence encode
    // is injective and this always passes; scan anyway.
    std::vector<std::uint64_t> order(count);
    for (std::uint64_t i = 0; i < count; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::uint64_t a, std::uint64_t b) {
      return std::lexicographical_compare(word_at(a).begin(), word_at(a).end(),
                                          word_at(b).begin(), word_at(b).end());
    });
    for (std::uint64_t i = 0; i + 1 < count; ++i) {
      if (std::ranges::equal(word_at(order[i]), word_at(order[i + 1]))) {
        std::uint64_t a = std::min(order[i], order[i + 1]);
        std::uint64_t b = std::max(order[i], order[i + 1]);
        return {false, std::pair(message_from_index(code, a), message_from_index(code, b))};
      }
    }
    return {true, std::nullopt};
  }

  if (threads == 0) threads = 1;
  // Confusable iff some pair has lcs >= n - t, i.e. n - lcs <= t.
  std::atomic<std::uint64_t> stop_first{UINT64_MAX};
  std::vector<std::optional<std::pair<std::uint64_t, std::uint64_t>>> found(threads);
  auto worker = [&](unsigned tid) {
    for (std::uint64_t a = tid; a < count; a += threads) {
      if (a > stop_first.load(std::memory_order_relaxed)) break;
      for (std::uint64_t b = a + 1; b < count; ++b) {
        std::size_t common = lcs(word_at(a), word_at(b));
        if (n - common <= t) {
          found[tid] = std::pair(a, b);
          std::uint64_t cur = stop_first.load(std::memory_order_relaxed);
          while (a < cur && !stop_first.compare_exchange_weak(cur, a)) {
          }
          return;
        }
      }
    }
  };
  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned tid = 0; tid < threads; ++tid) pool.emplace_back(worker, tid);
    for (std::thread& th : pool) th.join();
  }
  std::optional<std::pair<std::uint64_t, std::uint64_t>> best;
  for (const auto& f : found) {
    if (f && (!best || *f < *best)) best = f;
  }
  if (best) {
    return {false, std::pair(message_from_index(code, best->first),
                             message_from_index(code, best->second))};
  }
  return {true, std::nullopt};
}

}  // namespace insdel
