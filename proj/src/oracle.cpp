#include "palin/oracle.hpp"

#include <algorithm>
#include <iterator>

#include "palin/exact.hpp"

namespace palin::oracle {

namespace {

std::vector<std::int64_t> first_counts(std::int64_t n, std::int64_t b) {
  std::vector<std::int64_t> c(static_cast<std::size_t>(b), 0);
  c.back() = n;
  return c;
}

void check_enumeration_cap(std::int64_t n, std::int64_t b, std::uint64_t cap) {
  const BigInt size = binomial(static_cast<std::uint64_t>(n + b - 1),
                               static_cast<std::uint64_t>(b - 1));
  if (mpz_cmp_ui(size.get_mpz_t(), cap) > 0) {
    throw cap_exceeded("enumeration cap exceeded: space of n=" + std::to_string(n) +
                       ", b=" + std::to_string(b) + " holds " + size.get_str() +
                       " multisets > cap " + std::to_string(cap));
  }
}

}  // namespace

MultisetRange::MultisetRange(std::int64_t n, std::int64_t b, std::uint64_t cap)
    : n_(n), b_(b) {
  if (n < 0) throw std::invalid_argument("cardinality must be nonnegative");
  if (b < 2) throw std::invalid_argument("b must be at least 2");
  check_enumeration_cap(n, b, cap);
}

MultisetRange::iterator::iterator(std::int64_t n, std::int64_t b)
    : current_(first_counts(n, b)) {}

MultisetRange::iterator& MultisetRange::iterator::operator++() {
  std::vector<std::int64_t> c(current_.counts().begin(), current_.counts().end());
  const auto b = static_cast<std::int64_t>(c.size());
  std::int64_t t = b - 1;
  while (t >= 0 && c[static_cast<std::size_t>(t)] == 0) --t;
  if (t <= 0) {
    done_ = true;
    return *this;
  }
  // Smallest lexicographic step: bump the slot left of the last mass, then
  // park the remainder in the final slot.
  const std::int64_t moved = c[static_cast<std::size_t>(t)];
  c[static_cast<std::size_t>(t)] = 0;
  c[static_cast<std::size_t>(t - 1)] += 1;
  c.back() = moved - 1;
  current_ = Multiset(std::move(c));
  return *this;
}

MultisetRange enumerate_multisets(const SpaceParams& p, std::uint64_t cap) {
  return MultisetRange(p.n(), p.b(), cap);
}

MultisetRange enumerate_counts(std::int64_t n, std::int64_t b, std::uint64_t cap) {
  return MultisetRange(n, b, cap);
}

bool is_palindromic(const Multiset& m, Method method) {
  if (method == Method::counts) {
    std::int64_t odd = 0;
    for (std::int64_t c : m.counts()) {
      odd += c % 2;
    }
    return m.cardinality() % 2 == 0 ? odd == 0 : odd == 1;
  }

  if (m.cardinality() > 10) {
    throw std::invalid_argument("search method is limited to n <= 10");
  }
  std::vector<std::int64_t> word;
  word.reserve(static_cast<std::size_t>(m.cardinality()));
  for (std::int64_t s = 0; s < m.alphabet_size(); ++s) {
    word.insert(word.end(), static_cast<std::size_t>(m.count(s)), s);
  }
  // word starts sorted, so next_permutation walks every distinct arrangement.
  do {
    if (std::equal(word.begin(), word.end(), word.rbegin())) return true;
  } while (std::next_permutation(word.begin(), word.end()));
  return false;
}

BruteCounts brute_force_counts(const SpaceParams& p, std::uint64_t cap) {
  std::uint64_t total = 0;
  std::uint64_t pal = 0;
  for (const Multiset& m : enumerate_multisets(p, cap)) {
    ++total;
    if (is_palindromic(m, Method::counts)) ++pal;
  }
  return BruteCounts{BigInt(static_cast<unsigned long>(total)),
                     BigInt(static_cast<unsigned long>(pal))};
}

namespace {

BigInt class_size_of(const std::vector<std::int64_t>& parts, std::int64_t b) {
  BigInt cs = 1;
  for (std::size_t j = 0; j < parts.size(); ++j) {
    cs *= static_cast<long>(b - static_cast<std::int64_t>(j));
  }
  // Parts of equal value are interchangeable between symbols.
  std::size_t i = 0;
  while (i < parts.size()) {
    std::size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    if (j - i > 1) {
      BigInt f;
      mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(j - i));
      mpz_divexact(cs.get_mpz_t(), cs.get_mpz_t(), f.get_mpz_t());
    }
    i = j;
  }
  return cs;
}

void emit_partitions(std::int64_t remaining, std::int64_t slots, std::int64_t limit,
                     std::int64_t n, std::int64_t b, std::vector<std::int64_t>& acc,
                     const std::function<void(const Profile&)>& fn) {
  if (remaining == 0) {
    std::int64_t odd = 0;
    for (std::int64_t part : acc) odd += part % 2;
    const bool pal = n % 2 == 0 ? odd == 0 : odd == 1;
    fn(Profile{acc, class_size_of(acc, b), pal});
    return;
  }
  if (slots == 0) return;
  const std::int64_t lo = (remaining + slots - 1) / slots;
  const std::int64_t hi = std::min(limit, remaining);
  for (std::int64_t part = lo; part <= hi; ++part) {
    acc.push_back(part);
    emit_partitions(remaining - part, slots - 1, part, n, b, acc, fn);
    acc.pop_back();
  }
}

}  // namespace

void for_each_profile(const SpaceParams& p, const std::function<void(const Profile&)>& fn,
                      std::int64_t partition_cap) {
  if (p.n() > partition_cap) {
    throw cap_exceeded("partition cap exceeded: n=" + std::to_string(p.n()) +
                       " > cap " + std::to_string(partition_cap));
  }
  std::vector<std::int64_t> acc;
  emit_partitions(p.n(), p.b(), p.n(), p.n(), p.b(), acc, fn);
}

std::vector<Profile> profiles(const SpaceParams& p, std::int64_t partition_cap) {
  std::vector<Profile> out;
  for_each_profile(p, [&out](const Profile& pr) { out.push_back(pr); }, partition_cap);
  return out;
}

Multiset doubled(const Multiset& m) {
  std::vector<std::int64_t> c(m.counts().begin(), m.counts().end());
  for (std::int64_t& v : c) v *= 2;
  return Multiset(std::move(c));
}

Multiset halved(const Multiset& m) {
  std::vector<std::int64_t> c(m.counts().begin(), m.counts().end());
  for (std::size_t s = 0; s < c.size(); ++s) {
    if (c[s] % 2 != 0) {
      throw std::invalid_argument("not palindromic: symbol " + std::to_string(s) +
                                  " has odd count " + std::to_string(c[s]));
    }
    c[s] /= 2;
  }
  return Multiset(std::move(c));
}

Multiset add_center(const Multiset& m, std::int64_t symbol) {
  if (symbol < 0 || symbol >= m.alphabet_size()) {
    throw std::invalid_argument("center symbol out of range");
  }
  if (m.cardinality() % 2 != 0) {
    throw std::invalid_argument("center insertion requires an even-cardinality multiset");
  }
  if (!is_palindromic(m, Method::counts)) {
    throw std::invalid_argument("center insertion requires a palindromic multiset");
  }
  std::vector<std::int64_t> c(m.counts().begin(), m.counts().end());
  c[static_cast<std::size_t>(symbol)] += 1;
  return Multiset(std::move(c));
}

}  // namespace palin::oracle
