#ifndef LEXCYCLE_HPP
#define LEXCYCLE_HPP

#include "lexcycle/error.hpp"
#include "lexcycle/complex.hpp"
#include "lexcycle/chain.hpp"
#include "lexcycle/bit_column.hpp"
#include "lexcycle/persistence.hpp"
#include "lexcycle/surface_lex.hpp"
#include "lexcycle/linkgen.hpp"
#include "lexcycle/oracle.hpp"
#include "lexcycle/generators.hpp"
#include "lexcycle/io.hpp"

#endif // LEXCYCLE_HPP
