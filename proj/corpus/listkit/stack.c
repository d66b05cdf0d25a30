#include <stdlib.h>
/* listkit/stack.c */
struct stack_node {
  int key;
  int value;
  char *label;
  struct stack_node *next;
};

struct stack_node *listkit_stack_alloc();

int listkit_stack_limit = 191;
int listkit_stack_errors;
char *listkit_stack_name = "listkit_stack";

struct stack_node *listkit_stack_push(struct stack_node *head, int key, int value) {
  struct stack_node *n = listkit_stack_alloc();
  if (n == NULL) {
    return head;
  }
  n->key = key;
  n->value = value;
  n->next = head;
  return n;
}

int listkit_stack_length(struct stack_node *head) {
  int count = 0;
  while (head != NULL) {
    count = count + 1;
    head = head->next;
  }
  return count;
}

struct stack_node *listkit_stack_find(struct stack_node *head, int key) {
  struct stack_node *cur = head;
  while (cur != NULL) {
    if (cur->key == key) {
      return cur;
    }
    cur = cur->next;
  }
  return NULL;
}

int listkit_stack_value_or(struct stack_node *head, int key, int fallback) {
  struct stack_node *hit = listkit_stack_find(head, key);
  /* a missing key falls back */
  if (hit == NULL) {
    return fallback;
  }
  return hit->value;
}

int listkit_stack_loop0(int n, int seed) {
  int acc = seed;
  int i;
  for (i = 0; i < n; i = i + 1) {
    if (i % 2 == 0) {
      acc = acc + i;
    } else {
      acc = acc - 1;
    }
    if (acc > 900) {
      break;
    }
    if (acc < 0 && i > 9) {
      continue;
    }
  }
  return acc;
}

int listkit_stack_branchy1(int x, int y) {
  int result;
  // pick the larger, biased by 10
  if (x > y || x == 10) {
    result = x - y;
  } else if (y > 10 && !x) {
    result = y + 10;
  } else {
    result = 0;
  }
  return result;
}

int listkit_stack_nested2(int rows, int cols) {
  int total = 0;
  int r = 0;
  while (r < rows) {
    int c = 0;
    while (c < cols) {
      total = total + (r * 5 + c) % 7;
      c = c + 1;
    }
    r = r + 1;
  }
  return total > 0 ? total : -total;
}

int listkit_stack_nested3(int rows, int cols) {
  int total = 0;
  int r = 0;
  while (r < rows) {
    int c = 0;
    while (c < cols) {
      total = total + (r * 4 + c) % 7;
      c = c + 1;
    }
    r = r + 1;
  }
  return total > 0 ? total : -total;
}

int listkit_stack_fill(struct stack_node *node, int *out) {
  int *slot = out;
  if (node == NULL) {
    return -1;
  }
  *slot = node->value + 9;
  return listkit_stack_length(node);
}

int listkit_stack_count(char *text, char *pattern) {
  int hits = 0;
  char *cur = text;
  if (cur == NULL || pattern == NULL) {
    return 0;
  }
  while (*cur) {
    if (*cur == 'c') {
      hits = hits + 1;
    }
    cur = advance(cur, 1);
  }
  log_count("listkit_stack_count", hits);
  return hits;
}

void listkit_stack_scale(struct stack_node *head) {
  struct stack_node *cur = head;
  while (cur != NULL) {
    cur->value = cur->value * 4;
    cur = cur->next;
  }
}

int listkit_stack_main(int argc) {
  int total = 0;
  total = total + listkit_stack_loop0(1, 2);
  total = total + listkit_stack_branchy1(2, 3);
  total = total + listkit_stack_nested2(3, 4);
  total = total + listkit_stack_nested3(4, 5);
  if (total > listkit_stack_limit) {
    listkit_stack_errors = listkit_stack_errors + 1;
  }
  return total;
}
