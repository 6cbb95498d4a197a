// Copyright (C) 2026 The hypergh Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hypergh {

enum class ErrorCode {
    InvalidArgument,
    EmptyAxis,
    NonFiniteWeight,
    DuplicateIdentifier,
    IndexOutOfRange,
    BudgetExceeded,
    CapExceeded,
    NotBipartite,
    NotAMetric,
    MalformedChain,
    EmptySet,
    ParseError,
    ValidationError,
    IoError,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

 private:
    ErrorCode code_;
};

/// Dense row-major matrix of doubles.
class Matrix {
 public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, double fill = 0.0);
    Matrix(std::size_t rows, std::size_t cols, std::vector<double> values);
    Matrix(std::initializer_list<std::initializer_list<double>> rows);

    static Matrix from_rows(const std::vector<std::vector<double>>& rows);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool empty() const noexcept { return values_.empty(); }

    double operator()(std::size_t i, std::size_t j) const { return values_[i * cols_ + j]; }
    double& operator()(std::size_t i, std::size_t j) { return values_[i * cols_ + j]; }

    std::span<const double> row(std::size_t i) const {
        return {values_.data() + i * cols_, cols_};
    }
    std::span<const double> values() const noexcept { return values_; }

    Matrix transposed() const;

    /// Largest entrywise |a - b|; matrices must share a shape.
    static double max_abs_difference(const Matrix& a, const Matrix& b);

    friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> values_;
};

/// Finite hypernetwork (X, Y, omega): omega(x, y) is the weight of node x in hyperedge y.
///
/// Values are immutable after construction and always satisfy: both axes
/// nonempty, unique identifiers per axis, every weight finite.
class Hypernetwork {
 public:
    /// Validating constructor; throws Error on any invariant violation.
    Hypernetwork(std::vector<std::string> nodes, std::vector<std::string> edges, Matrix omega);

    /// Identifiers default to x1..xn and y1..ym.
    explicit Hypernetwork(Matrix omega);

    const std::vector<std::string>& nodes() const noexcept { return nodes_; }
    const std::vector<std::string>& edges() const noexcept { return edges_; }
    const Matrix& omega() const noexcept { return omega_; }

    std::size_t num_nodes() const noexcept { return nodes_.size(); }
    std::size_t num_edges() const noexcept { return edges_.size(); }
    double operator()(std::size_t x, std::size_t y) const { return omega_(x, y); }

    /// Swaps the roles of nodes and hyperedges.
    Hypernetwork transposed() const;

    friend bool operator==(const Hypernetwork&, const Hypernetwork&) = default;

 private:
    std::vector<std::string> nodes_;
    std::vector<std::string> edges_;
    Matrix omega_;
};

/// Finite network (X, omega) with a square kernel. No symmetry or zero diagonal is assumed.
class Network {
 public:
    Network(std::vector<std::string> nodes, Matrix omega);
    explicit Network(Matrix omega);

    const std::vector<std::string>& nodes() const noexcept { return nodes_; }
    const Matrix& omega() const noexcept { return omega_; }
    std::size_t size() const noexcept { return nodes_.size(); }
    double operator()(std::size_t a, std::size_t b) const { return omega_(a, b); }

    friend bool operator==(const Network&, const Network&) = default;

 private:
    std::vector<std::string> nodes_;
    Matrix omega_;
};

using IndexPair = std::pair<std::size_t, std::size_t>;
using Relation = std::vector<IndexPair>;

/// A relation is a correspondence when it covers every index on both sides.
bool is_correspondence(const Relation& r, std::size_t left_size, std::size_t right_size);

/// Node correspondence S and hyperedge correspondence T, stored sorted and deduplicated.
struct CorrespondencePair {
    Relation s;
    Relation t;

    bool is_valid(std::size_t nodes, std::size_t nodes_prime, std::size_t edges,
                  std::size_t edges_prime) const;
};

/// Maps phi: X -> X', psi: Y -> Y', phi_back: X' -> X, psi_back: Y' -> Y as index arrays.
struct MapQuadruple {
    std::vector<std::size_t> phi;
    std::vector<std::size_t> psi;
    std::vector<std::size_t> phi_back;
    std::vector<std::size_t> psi_back;

    bool is_valid(std::size_t nodes, std::size_t nodes_prime, std::size_t edges,
                  std::size_t edges_prime) const;

    /// S = graph(phi) + graph(phi_back)^T and T likewise.
    CorrespondencePair to_correspondence() const;

    static MapQuadruple identity(std::size_t nodes, std::size_t edges);

    friend bool operator==(const MapQuadruple&, const MapQuadruple&) = default;
};

/// Checks every invariant of a hypernetwork description without constructing it.
void validate(const std::vector<std::string>& nodes, const std::vector<std::string>& edges,
              const Matrix& omega);

Hypernetwork from_network(const Network& n);

/// Result of merging identical omega rows and columns.
struct Reduction {
    Hypernetwork reduced;
    std::vector<std::size_t> node_class;           // original node -> reduced node
    std::vector<std::size_t> edge_class;           // original edge -> reduced edge
    std::vector<std::size_t> node_representative;  // reduced node -> smallest original node
    std::vector<std::size_t> edge_representative;
};

Reduction reduce_with_maps(const Hypernetwork& h);

/// Merges nodes with identical omega rows and hyperedges with identical columns.
/// Equality is exact; the merged identifier is the first member's identifier.
Hypernetwork reduce(const Hypernetwork& h);

/// True iff a pair of bijections carries one kernel onto the other.
bool is_strongly_isomorphic(const Hypernetwork& a, const Hypernetwork& b);

}  // namespace hypergh
