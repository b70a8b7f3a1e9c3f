// Copyright 2026 The bihom Authors. All rights reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "bihom/multilinear.hpp"

#include "bihom/errors.hpp"

namespace bihom {

namespace {

std::size_t checked_power(std::size_t base, std::size_t exp) {
  std::size_t out = 1;
  for (std::size_t i = 0; i < exp; ++i) out *= base;
  return out;
}

}  // namespace

Multilinear::Multilinear(std::size_t arity, std::size_t in_dim, std::size_t out_dim)
    : arity_(arity),
      in_dim_(in_dim),
      out_dim_(out_dim),
      tuples_(checked_power(in_dim, arity)),
      data_(tuples_ * out_dim, Rational(0)) {}

Multilinear Multilinear::from_coordinates(std::size_t arity, std::size_t in_dim,
                                          std::size_t out_dim, Vector coords) {
  Multilinear f(arity, in_dim, out_dim);
  if (coords.size() != f.data_.size()) {
    throw InputError("multilinear map: expected " + std::to_string(f.data_.size()) +
                     " coordinates, got " + std::to_string(coords.size()));
  }
  f.data_ = std::move(coords);
  return f;
}

std::size_t Multilinear::flat_index(std::span<const std::size_t> tuple) const {
  if (tuple.size() != arity_) throw InputError("multilinear map: tuple arity mismatch");
  std::size_t flat = 0;
  for (auto i : tuple) {
    if (i >= in_dim_) throw InputError("multilinear map: basis index out of range");
    flat = flat * in_dim_ + i;
  }
  return flat;
}

std::vector<std::size_t> Multilinear::tuple_at(std::size_t flat) const {
  std::vector<std::size_t> tuple(arity_);
  for (std::size_t pos = arity_; pos > 0; --pos) {
    tuple[pos - 1] = flat % in_dim_;
    flat /= in_dim_;
  }
  return tuple;
}

Rational& Multilinear::at(std::span<const std::size_t> tuple, std::size_t k) {
  if (k >= out_dim_) throw InputError("multilinear map: output index out of range");
  return data_[flat_index(tuple) * out_dim_ + k];
}

const Rational& Multilinear::at(std::span<const std::size_t> tuple, std::size_t k) const {
  if (k >= out_dim_) throw InputError("multilinear map: output index out of range");
  return data_[flat_index(tuple) * out_dim_ + k];
}

Vector Multilinear::value(std::span<const std::size_t> tuple) const {
  const std::size_t base = flat_index(tuple) * out_dim_;
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(base),
                data_.begin() + static_cast<std::ptrdiff_t>(base + out_dim_));
}

void Multilinear::set_value(std::span<const std::size_t> tuple, const Vector& v) {
  if (v.size() != out_dim_) throw InputError("multilinear map: value length mismatch");
  const std::size_t base = flat_index(tuple) * out_dim_;
  for (std::size_t k = 0; k < out_dim_; ++k) data_[base + k] = v[k];
}

Vector Multilinear::evaluate(std::span<const Vector> args) const {
  if (args.size() != arity_) throw InputError("multilinear map: argument count mismatch");
  for (const auto& a : args) {
    if (a.size() != in_dim_) throw InputError("multilinear map: argument length mismatch");
  }
  // Contract slot by slot, most significant first.
  Vector current = data_;
  std::size_t block = current.size();
  for (const auto& arg : args) {
    block /= in_dim_;
    Vector next(block, Rational(0));
    for (std::size_t i = 0; i < in_dim_; ++i) {
      if (sgn(arg[i]) == 0) continue;
      const std::size_t offset = i * block;
      for (std::size_t j = 0; j < block; ++j) {
        const Rational& c = current[offset + j];
        if (sgn(c) != 0) next[j] += arg[i] * c;
      }
    }
    current = std::move(next);
  }
  return current;
}

Multilinear Multilinear::precompose(const Matrix& m) const {
  if (m.rows() != in_dim_ || m.cols() != in_dim_) {
    throw InputError("multilinear map: precompose shape mismatch");
  }
  std::vector<Vector> columns;
  for (std::size_t j = 0; j < in_dim_; ++j) columns.push_back(m.column(j));
  Multilinear out(arity_, in_dim_, out_dim_);
  std::vector<Vector> args(arity_);
  for_each_tuple(arity_, in_dim_, [&](std::span<const std::size_t> tuple) {
    for (std::size_t a = 0; a < arity_; ++a) args[a] = columns[tuple[a]];
    out.set_value(tuple, evaluate(args));
  });
  return out;
}

Multilinear Multilinear::postcompose(const Matrix& p) const {
  if (p.cols() != out_dim_) throw InputError("multilinear map: postcompose shape mismatch");
  Multilinear out(arity_, in_dim_, p.rows());
  for (std::size_t t = 0; t < tuples_; ++t) {
    const Vector v(data_.begin() + static_cast<std::ptrdiff_t>(t * out_dim_),
                   data_.begin() + static_cast<std::ptrdiff_t>((t + 1) * out_dim_));
    const Vector w = p * v;
    for (std::size_t k = 0; k < w.size(); ++k) out.data_[t * p.rows() + k] = w[k];
  }
  return out;
}

Multilinear Multilinear::permute_inputs(std::span<const std::size_t> perm) const {
  if (perm.size() != arity_) throw InputError("multilinear map: permutation arity mismatch");
  Multilinear out(arity_, in_dim_, out_dim_);
  std::vector<std::size_t> source(arity_);
  for_each_tuple(arity_, in_dim_, [&](std::span<const std::size_t> tuple) {
    for (std::size_t a = 0; a < arity_; ++a) source[a] = tuple[perm[a]];
    out.set_value(tuple, value(source));
  });
  return out;
}

bool Multilinear::is_zero() const { return bihom::is_zero(data_); }

Multilinear& Multilinear::operator+=(const Multilinear& other) {
  if (arity_ != other.arity_ || in_dim_ != other.in_dim_ || out_dim_ != other.out_dim_) {
    throw InputError("multilinear map: shape mismatch");
  }
  data_ += other.data_;
  return *this;
}

Multilinear& Multilinear::operator-=(const Multilinear& other) {
  if (arity_ != other.arity_ || in_dim_ != other.in_dim_ || out_dim_ != other.out_dim_) {
    throw InputError("multilinear map: shape mismatch");
  }
  data_ -= other.data_;
  return *this;
}

Multilinear& Multilinear::operator*=(const Rational& s) {
  for (auto& x : data_) x *= s;
  return *this;
}

Multilinear operator+(Multilinear a, const Multilinear& b) { return a += b; }
Multilinear operator-(Multilinear a, const Multilinear& b) { return a -= b; }
Multilinear operator*(const Rational& s, Multilinear f) { return f *= s; }

}  // namespace bihom
