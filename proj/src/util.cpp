#include "quadgor/util.hpp"

#include <cstdlib>
#include <mutex>
#include <thread>
#include <vector>

#include "quadgor/errors.hpp"

namespace qg {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::NonPure: return "NonPure";
    case Errc::DuplicateFacet: return "DuplicateFacet";
    case Errc::UnusedVertex: return "UnusedVertex";
    case Errc::DimensionTooSmall: return "DimensionTooSmall";
    case Errc::OrderTooSmall: return "OrderTooSmall";
    case Errc::Infeasible: return "Infeasible";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::BidegreeOutOfRange: return "BidegreeOutOfRange";
    case Errc::BadDegree: return "BadDegree";
    case Errc::InstanceTooLarge: return "InstanceTooLarge";
    case Errc::NotFoundWithinBound: return "NotFoundWithinBound";
    case Errc::ParseError: return "ParseError";
    case Errc::BadArgument: return "BadArgument";
  }
  return "Error";
}

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) fail(Errc::BadArgument, "Rng::below bound must be positive");
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t v;
  do {
    v = next();
  } while (v >= limit);
  return v % bound;
}

std::int64_t Rng::in_range(std::int64_t lo, std::int64_t hi) {
  if (lo > hi) fail(Errc::BadArgument, "Rng::in_range empty interval");
  const std::uint64_t width = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(below(width));
}

BigInt binomial(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt acc = 1;
  for (long long t = 1; t <= k; ++t) {
    acc *= (n - k + t);
    acc /= t;  // exact at every step: acc is binomial(n-k+t, t)
  }
  return acc;
}

unsigned worker_count() {
  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  if (const char* env = std::getenv("QG_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && v >= 1) return static_cast<unsigned>(v < static_cast<long>(hw) ? v : hw);
  }
  return hw;
}

void parallel_for_index(std::size_t count, const std::function<void(std::size_t)>& fn) {
  const unsigned workers = worker_count();
  if (count == 0) return;
  if (workers <= 1 || count == 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  const unsigned used = static_cast<unsigned>(count < workers ? count : workers);
  pool.reserve(used);
  std::exception_ptr first_error;
  std::mutex error_mutex;
  for (unsigned w = 0; w < used; ++w) {
    pool.emplace_back([&, w]() {
      try {
        for (std::size_t i = w; i < count; i += used) fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

std::string to_string(const BigInt& v) { return v.str(); }

std::string to_string(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

Rational rational_from_string(const std::string& s) {
  if (s.empty()) fail(Errc::ParseError, "empty rational literal");
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(s));
    BigInt num(s.substr(0, slash));
    BigInt den(s.substr(slash + 1));
    if (den == 0) fail(Errc::ParseError, "zero denominator in '" + s + "'");
    return make_rational(num, den);
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    fail(Errc::ParseError, "malformed rational literal '" + s + "'");
  }
}

}  // namespace qg
