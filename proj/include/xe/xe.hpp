#ifndef XE_XE_HPP
#define XE_XE_HPP

#include "xe/integer.hpp"
#include "xe/chow.hpp"
#include "xe/coh.hpp"
#include "xe/instanton.hpp"
#include "xe/beilinson.hpp"
#include "xe/render.hpp"
#include "xe/json_io.hpp"
#include "xe/verify.hpp"

#endif  // XE_XE_HPP
