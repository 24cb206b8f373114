#include "purecoeffs/sampling.hpp"

#include <algorithm>

#include "purecoeffs/error.hpp"

namespace purecoeffs {

std::int64_t Sampler::uniform(std::int64_t lo, std::int64_t hi) {
  if (lo > hi) throw Error(ErrorCode::InvalidArgument, "empty sampling range");
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(engine_() % span);
}

std::vector<std::int64_t> Sampler::strict_sequence(unsigned len, std::int64_t lo, std::int64_t hi) {
  if (hi - lo + 1 < static_cast<std::int64_t>(len))
    throw Error(ErrorCode::InvalidArgument, "range too small for a strictly increasing sequence");
  // Floyd's subset sampling keeps the draw count at exactly len.
  std::vector<std::int64_t> picked;
  const std::int64_t n = hi - lo + 1;
  for (std::int64_t r = n - static_cast<std::int64_t>(len); r < n; ++r) {
    const std::int64_t t = uniform(0, r);
    const bool taken = std::find(picked.begin(), picked.end(), lo + t) != picked.end();
    picked.push_back(lo + (taken ? r : t));
  }
  std::sort(picked.begin(), picked.end());
  return picked;
}

namespace {

void strict_rec(unsigned len, std::int64_t next, std::int64_t hi, std::vector<std::int64_t>& cur,
                const std::function<void(const std::vector<std::int64_t>&)>& visit) {
  if (cur.size() == len) {
    visit(cur);
    return;
  }
  const auto remaining = static_cast<std::int64_t>(len - cur.size());
  for (std::int64_t v = next; v + remaining - 1 <= hi; ++v) {
    cur.push_back(v);
    strict_rec(len, v + 1, hi, cur, visit);
    cur.pop_back();
  }
}

}  // namespace

void for_each_strict_sequence(unsigned len, std::int64_t lo, std::int64_t hi,
                              const std::function<void(const std::vector<std::int64_t>&)>& visit) {
  std::vector<std::int64_t> cur;
  strict_rec(len, lo, hi, cur, visit);
}

}  // namespace purecoeffs
