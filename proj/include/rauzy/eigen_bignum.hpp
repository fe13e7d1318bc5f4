#pragma once

#include <Eigen/Core>
#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/traits/is_byte_container.hpp>

// Boost's byte-container probe is not SFINAE-safe for Eigen expression
// types (a 2-D expression's const_iterator is void, and the probe
// dereferences it); opt Eigen types out explicitly so the scalar-promotion
// overload checks inside Eigen stay well-formed.
namespace boost {
namespace multiprecision {
namespace detail {

template <typename S, int R, int C, int O, int MR, int MC>
struct is_byte_container<Eigen::Matrix<S, R, C, O, MR, MC>> : public boost::false_type {};

template <typename L, typename R, int Option>
struct is_byte_container<Eigen::Product<L, R, Option>> : public boost::false_type {};

template <typename Op, typename L, typename R>
struct is_byte_container<Eigen::CwiseBinaryOp<Op, L, R>> : public boost::false_type {};

template <typename Op, typename X>
struct is_byte_container<Eigen::CwiseUnaryOp<Op, X>> : public boost::false_type {};

template <typename X, int R, int C, bool P>
struct is_byte_container<Eigen::Block<X, R, C, P>> : public boost::false_type {};

template <typename X>
struct is_byte_container<Eigen::Transpose<X>> : public boost::false_type {};

template <typename Op, typename X>
struct is_byte_container<Eigen::CwiseNullaryOp<Op, X>> : public boost::false_type {};

template <typename X>
struct is_byte_container<Eigen::MatrixBase<X>> : public boost::false_type {};

template <typename X>
struct is_byte_container<Eigen::DenseBase<X>> : public boost::false_type {};

template <typename X>
struct is_byte_container<Eigen::EigenBase<X>> : public boost::false_type {};

}  // namespace detail
}  // namespace multiprecision
}  // namespace boost
