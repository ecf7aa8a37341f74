#include "sigrec/taylor_jet.hpp"

#include <stdexcept>

namespace sigrec {

namespace {
void gen(int nvars, int degree, int var, std::vector<int>& cur, int used,
         std::vector<std::vector<int>>& out) {
  if (var == nvars) {
    out.push_back(cur);
    return;
  }
  for (int e = 0; e + used <= degree; ++e) {
    cur[static_cast<std::size_t>(var)] = e;
    gen(nvars, degree, var + 1, cur, used + e, out);
  }
  cur[static_cast<std::size_t>(var)] = 0;
}
}  // namespace

TaylorJetSpace::TaylorJetSpace(int nvars, int degree) : nvars_(nvars), degree_(degree) {
  if (nvars < 1 || degree < 0) throw std::invalid_argument("TaylorJetSpace: bad shape");
  if (degree > 15) throw unsupported_order_error("TaylorJetSpace: degree exceeds packing limit");
  std::vector<std::vector<int>> raw;
  std::vector<int> cur(static_cast<std::size_t>(nvars), 0);
  gen(nvars, degree, 0, cur, 0, raw);
  // order by total degree so index 0 is the constant term
  for (int deg = 0; deg <= degree; ++deg)
    for (auto& m : raw) {
      int td = 0;
      for (int e : m) td += e;
      if (td == deg) {
        lookup_[key(m)] = static_cast<int>(monomials_.size());
        monomials_.push_back(m);
        degrees_.push_back(td);
      }
    }
  lower_.resize(monomials_.size(), std::vector<int>(static_cast<std::size_t>(nvars), -1));
  for (std::size_t i = 0; i < monomials_.size(); ++i) {
    for (int v = 0; v < nvars; ++v) {
      if (monomials_[i][static_cast<std::size_t>(v)] > 0) {
        auto e = monomials_[i];
        --e[static_cast<std::size_t>(v)];
        lower_[i][static_cast<std::size_t>(v)] = lookup_.at(key(e));
      }
    }
  }
}

std::uint64_t TaylorJetSpace::key(const std::vector<int>& exponents) {
  std::uint64_t k = 0;
  for (std::size_t i = 0; i < exponents.size(); ++i)
    k |= static_cast<std::uint64_t>(exponents[i] & 0xf) << (4 * i);
  return k;
}

int TaylorJetSpace::index(const std::vector<int>& exponents) const {
  auto it = lookup_.find(key(exponents));
  return it == lookup_.end() ? -1 : it->second;
}

int TaylorJetSpace::product(int a, int b) const {
  if (total_degree(a) + total_degree(b) > degree_) return -1;
  std::vector<int> e = exponents(a);
  const auto& eb = exponents(b);
  for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
  return index(e);
}

TaylorJet& TaylorJet::operator+=(const TaylorJet& o) {
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

TaylorJet TaylorJet::operator*(const TaylorJet& o) const {
  TaylorJet out(space_);
  const int n = space_->size();
  for (int a = 0; a < n; ++a) {
    if (c_[static_cast<std::size_t>(a)] == 0.0) continue;
    for (int b = 0; b < n; ++b) {
      if (o.c_[static_cast<std::size_t>(b)] == 0.0) continue;
      const int p = space_->product(a, b);
      if (p >= 0)
        out.c_[static_cast<std::size_t>(p)] +=
            c_[static_cast<std::size_t>(a)] * o.c_[static_cast<std::size_t>(b)];
    }
  }
  return out;
}

TaylorJet TaylorJet::derivative(int v) const {
  TaylorJet out(space_);
  const int n = space_->size();
  for (int idx = 0; idx < n; ++idx) {
    const int e = space_->exponents(idx)[static_cast<std::size_t>(v)];
    if (e > 0)
      out.c_[static_cast<std::size_t>(space_->lower(idx, v))] +=
          static_cast<double>(e) * c_[static_cast<std::size_t>(idx)];
  }
  return out;
}

}  // namespace sigrec
